#include "tate/product_space.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tate {

struct ProductSpace::ExteriorTables {
  std::vector<std::vector<ExtMask>> bases; // keyed by mixed-radix code of -c
  std::vector<std::size_t> radix;

  std::size_t code(const Multidegree& c) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < radix.size(); ++i)
      k = k * radix[i] + static_cast<std::size_t>(-c[i]);
    return k;
  }
};

ProductSpace::ProductSpace(std::vector<int> dims, PrimeField field)
    : dims_(std::move(dims)), field_(field) {
  if (dims_.empty())
    throw std::invalid_argument("product space needs at least one factor");
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 1)
      throw std::invalid_argument("factor dimensions must be >= 1");
    offsets_.push_back(groupOf_.size());
    for (int j = 0; j <= dims_[i]; ++j)
      groupOf_.push_back(i);
  }
  if (groupOf_.size() > kMaxVariables)
    throw std::invalid_argument("too many variables for exterior bitmasks");

  const std::size_t n = groupOf_.size();
  auto tables = std::make_shared<ExteriorTables>();
  std::size_t buckets = 1;
  for (int d : dims_) {
    tables->radix.push_back(static_cast<std::size_t>(d) + 2);
    buckets *= static_cast<std::size_t>(d) + 2;
  }
  tables->bases.resize(buckets);
  for (ExtMask m = 0; m < (ExtMask{1} << n); ++m)
    tables->bases[tables->code(exteriorDegree(m))].push_back(m);
  auto index = std::make_shared<std::vector<std::uint32_t>>(std::size_t{1} << n);
  for (auto& basis : tables->bases) {
    std::sort(basis.begin(), basis.end(), maskLexLess);
    for (std::size_t k = 0; k < basis.size(); ++k)
      (*index)[basis[k]] = static_cast<std::uint32_t>(k);
  }
  extIndex_ = std::move(index);
  extBases_ = std::move(tables);
}

int ProductSpace::totalDim() const {
  int s = 0;
  for (int d : dims_)
    s += d;
  return s;
}

Multidegree ProductSpace::exteriorDegree(ExtMask m) const {
  Multidegree d(factors());
  for (std::size_t i = 0; i < factors(); ++i) {
    ExtMask group = ((ExtMask{1} << groupSize(i)) - 1) << offsets_[i];
    d[i] = -std::popcount(m & group);
  }
  return d;
}

Multidegree ProductSpace::polynomialDegree(const std::vector<int>& exps) const {
  if (exps.size() != numVariables())
    throw std::invalid_argument("exponent vector has wrong length");
  Multidegree d(factors());
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] < 0)
      throw std::invalid_argument("negative exponent");
    d[groupOf_[k]] += exps[k];
  }
  return d;
}

const std::vector<ExtMask>& ProductSpace::exteriorBasis(const Multidegree& c) const {
  static const std::vector<ExtMask> empty;
  if (c.size() != factors())
    throw std::invalid_argument("multidegree length mismatch");
  for (std::size_t i = 0; i < factors(); ++i)
    if (c[i] > 0 || c[i] < -(dims_[i] + 1))
      return empty;
  return extBases_->bases[extBases_->code(c)];
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t dimSPiece(const ProductSpace& space, const Multidegree& d) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < space.factors(); ++i) {
    if (d[i] < 0)
      return 0;
    r *= binomial(space.dim(i) + d[i], space.dim(i));
  }
  return r;
}

std::uint64_t dimEPiece(const ProductSpace& space, const Multidegree& a) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < space.factors(); ++i) {
    if (a[i] > 0 || a[i] < -(space.dim(i) + 1))
      return 0;
    r *= binomial(space.dim(i) + 1, -a[i]);
  }
  return r;
}

} // namespace tate
