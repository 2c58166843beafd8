#pragma once

// Independent oracles and generators shared by the test suites.  Nothing in
// here calls into the library code under test except for constructors.

#include <cstdint>
#include <random>
#include <vector>

#include "tate/beilinson.hpp"
#include "tate/cohomology.hpp"

namespace testsupport {

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

/// dim S_d by the stars-and-bars count per factor.
inline std::int64_t dimS(const std::vector<int>& dims, const std::vector<int>& d) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (d[i] < 0)
      return 0;
    r *= binomial(d[i] + dims[i], dims[i]);
  }
  return r;
}

/// dim E_a, a <= 0: choose -a_i of the n_i+1 variables of each factor.
inline std::int64_t dimE(const std::vector<int>& dims, const std::vector<int>& a) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < dims.size(); ++i)
    r *= binomial(dims[i] + 1, -a[i]);
  return r;
}

/// (degree of the nonzero cohomology, its dimension) of O(k) on P^n.
struct LineCohomology {
  int degree;
  std::int64_t dim;
};

inline LineCohomology projectiveSpaceLine(int n, int k) {
  if (k >= 0)
    return {0, binomial(k + n, n)};
  if (k <= -n - 1)
    return {n, binomial(-k - 1, n)};
  return {0, 0};
}

/// h^i(O(a)) on a product, as a coefficient vector indexed by i.
inline std::vector<std::uint64_t> kunnethOracle(const std::vector<int>& dims,
                                                const std::vector<int>& a) {
  int degree = 0;
  std::int64_t dim = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    auto c = projectiveSpaceLine(dims[i], a[i]);
    degree += c.degree;
    dim *= c.dim;
  }
  if (dim == 0)
    return {};
  std::vector<std::uint64_t> out(degree + 1, 0);
  out[degree] = static_cast<std::uint64_t>(dim);
  return out;
}

/// Rank over GF(p) by dense Gaussian elimination.
inline std::size_t denseRank(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  auto mod = [p](std::int64_t x) { return ((x % p) + p) % p; };
  auto inv = [&](std::int64_t x) {
    std::int64_t r = 1, e = p - 2;
    x = mod(x);
    while (e) {
      if (e & 1)
        r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && mod(a[piv][c]) == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(a[piv], a[r]);
    std::int64_t s = inv(a[r][c]);
    for (auto& x : a[r])
      x = mod(x) * s % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || mod(a[i][c]) == 0)
        continue;
      std::int64_t f = mod(a[i][c]);
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] = mod(a[i][j] - f * a[r][j]);
    }
    ++r;
  }
  return r;
}

/// All exponent vectors in n variables of total degree k.
inline void compositions(int n, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(k);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int j = k; j >= 0; --j) {
    cur.push_back(j);
    compositions(n, k - j, cur, out);
    cur.pop_back();
  }
}

/// Random homogeneous polynomial of multidegree d (possibly zero).
inline tate::SPolynomial randomPolynomial(const tate::ProductSpace& space, const tate::Multidegree& d,
                                          std::mt19937& rng) {
  tate::SPolynomial p(d);
  bool ok = true;
  for (std::size_t i = 0; i < space.factors(); ++i)
    ok = ok && d[i] >= 0;
  if (!ok)
    return p;
  std::uniform_int_distribution<int> coef(0, static_cast<int>(space.field().characteristic()) - 1);
  for (const auto& e : tate::monomialBasis(space, d))
    if (rng() % 2)
      p.addTerm(e, static_cast<tate::Coeff>(coef(rng)), space);
  return p;
}

/// A presented module with up to maxGens generators and maxRels relation
/// columns, all degrees in [0, maxDeg]^t.
inline tate::PresentedModule randomModule(const tate::ProductSpace& space, std::mt19937& rng,
                                          int maxGens = 3, int maxRels = 3, int maxDeg = 2) {
  std::uniform_int_distribution<int> ng(1, maxGens), nr(0, maxRels), deg(0, maxDeg);
  auto randomDegree = [&] {
    std::vector<int> v;
    for (std::size_t i = 0; i < space.factors(); ++i)
      v.push_back(deg(rng));
    return tate::Multidegree(std::move(v));
  };
  std::vector<tate::Multidegree> gens(ng(rng));
  for (auto& g : gens)
    g = randomDegree();
  std::vector<tate::Multidegree> cols(nr(rng));
  std::vector<tate::RelationEntry> rels;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    cols[c] = randomDegree();
    for (std::size_t r = 0; r < gens.size(); ++r) {
      auto p = randomPolynomial(space, cols[c] - gens[r], rng);
      if (!p.isZero())
        rels.push_back({r, c, p});
    }
  }
  return tate::PresentedModule(space, std::move(gens), std::move(cols), std::move(rels));
}

/// Every multidegree in the box [low, high].
inline std::vector<tate::Multidegree> box(const tate::Multidegree& low, const tate::Multidegree& high) {
  std::vector<tate::Multidegree> out;
  tate::Multidegree d = low;
  while (true) {
    out.push_back(d);
    std::size_t i = 0;
    for (; i < d.size(); ++i) {
      if (d[i] < high[i]) {
        ++d[i];
        break;
      }
      d[i] = low[i];
    }
    if (i == d.size())
      return out;
  }
}

} // namespace testsupport
