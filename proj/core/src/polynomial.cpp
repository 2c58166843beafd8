#include "tate/polynomial.hpp"

#include <stdexcept>

namespace tate {

SPolynomial SPolynomial::monomial(const ProductSpace& space, Exponents exps, Coeff c) {
  SPolynomial p(space.polynomialDegree(exps));
  p.addTerm(exps, c % space.field().characteristic(), space);
  return p;
}

SPolynomial SPolynomial::variable(const ProductSpace& space, std::size_t var, Coeff c) {
  Exponents e(space.numVariables(), 0);
  e.at(var) = 1;
  return monomial(space, std::move(e), c);
}

SPolynomial SPolynomial::constant(const ProductSpace& space, Coeff c) {
  return monomial(space, Exponents(space.numVariables(), 0), c);
}

Coeff SPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void SPolynomial::addTerm(const Exponents& e, Coeff c, const ProductSpace& space) {
  if (c == 0)
    return;
  Multidegree d = space.polynomialDegree(e);
  if (degree_.size() == 0)
    degree_ = d;
  else if (!(d == degree_))
    throw std::invalid_argument("inhomogeneous term " + d.toString() +
                                " added to polynomial of degree " + degree_.toString());
  const auto& F = space.field();
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = F.add(it->second, c);
    if (it->second == 0)
      terms_.erase(it);
  }
}

SPolynomial& SPolynomial::addScaled(const SPolynomial& o, Coeff c, const ProductSpace& space) {
  if (degree_.size() == 0)
    degree_ = o.degree_;
  for (const auto& [e, v] : o.terms_)
    addTerm(e, space.field().mul(c, v), space);
  return *this;
}

std::string SPolynomial::toString(const ProductSpace& space) const {
  if (terms_.empty())
    return "0";
  const auto& F = space.field();
  std::string s;
  // print in descending lex order
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::int64_t v = F.lift(it->second);
    if (!s.empty())
      s += v < 0 ? "-" : "+";
    else if (v < 0)
      s += "-";
    std::int64_t a = v < 0 ? -v : v;
    bool constant = true;
    for (int x : it->first)
      constant = constant && x == 0;
    std::string mono;
    for (std::size_t k = 0; k < it->first.size(); ++k) {
      int x = it->first[k];
      if (x == 0)
        continue;
      if (!mono.empty())
        mono += "*";
      std::size_t g = space.groupOf(k);
      mono += "x_(" + std::to_string(g) + "," + std::to_string(k - space.groupOffset(g)) + ")";
      if (x > 1)
        mono += "^" + std::to_string(x);
    }
    if (constant)
      s += std::to_string(a);
    else if (a != 1)
      s += std::to_string(a) + "*" + mono;
    else
      s += mono;
  }
  return s;
}

SPolynomial multiply(const SPolynomial& f, const SPolynomial& g, const ProductSpace& space) {
  SPolynomial r(f.degree() + g.degree());
  const auto& F = space.field();
  for (const auto& [ef, cf] : f.terms())
    for (const auto& [eg, cg] : g.terms()) {
      Exponents e = ef;
      for (std::size_t k = 0; k < e.size(); ++k)
        e[k] += eg[k];
      r.addTerm(e, F.mul(cf, cg), space);
    }
  return r;
}

namespace {

void compositions(int remaining, std::size_t parts, Exponents& cur,
                  std::vector<Exponents>& out) {
  if (parts == 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur.push_back(v);
    compositions(remaining - v, parts - 1, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<Exponents> monomialBasis(const ProductSpace& space, const Multidegree& d) {
  std::vector<Exponents> result{Exponents{}};
  for (std::size_t i = 0; i < space.factors(); ++i) {
    if (d[i] < 0)
      return {};
    std::vector<Exponents> group;
    Exponents cur;
    compositions(d[i], space.groupSize(i), cur, group);
    std::vector<Exponents> next;
    next.reserve(result.size() * group.size());
    for (const auto& prefix : result)
      for (const auto& g : group) {
        Exponents e = prefix;
        e.insert(e.end(), g.begin(), g.end());
        next.push_back(std::move(e));
      }
    result = std::move(next);
  }
  return result;
}

std::size_t monomialIndex(const ProductSpace& space, const Exponents& exps) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < space.factors(); ++i) {
    const std::size_t off = space.groupOffset(i);
    const int m = space.dim(i); // parts - 1
    int total = 0;
    for (int k = 0; k <= m; ++k)
      total += exps[off + k];
    std::uint64_t rank = 0;
    int remaining = total;
    for (int k = 0; k < m; ++k) {
      int e = exps[off + k];
      for (int v = e + 1; v <= remaining; ++v)
        rank += binomial(remaining - v + m - k - 1, m - k - 1);
      remaining -= e;
    }
    index = index * binomial(total + m, m) + rank;
  }
  return index;
}

const std::vector<ExtMask>& exteriorMonomialBasis(const ProductSpace& space,
                                                  const Multidegree& a) {
  return space.exteriorBasis(a);
}

} // namespace tate
