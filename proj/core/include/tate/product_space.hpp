#pragma once

/**
 * @file product_space.hpp
 * @brief P^{n_1} x ... x P^{n_t}, its Cox ring S and the exterior algebra E.
 *
 * Variables are numbered globally: group 0 first, then group 1, and so on,
 * ascending within a group.  The same numbering serves the polynomial
 * variables x_{i,j} (degree e_i) and the exterior variables v_{i,j}
 * (degree -e_i).  Every sign and basis order in the library derives from it.
 */

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "tate/field.hpp"
#include "tate/multidegree.hpp"

namespace tate {

/// Exterior monomial: bit k set iff variable k is present.
using ExtMask = std::uint32_t;

class ProductSpace {
public:
  static constexpr std::size_t kMaxVariables = 24;

  ProductSpace(std::vector<int> dims, PrimeField field = PrimeField());

  std::size_t factors() const { return dims_.size(); }
  int dim(std::size_t i) const { return dims_[i]; }
  const std::vector<int>& dims() const { return dims_; }
  /// (n_1, ..., n_t) as a multidegree
  Multidegree dimsDegree() const { return Multidegree(dims_); }
  /// N = n_1 + ... + n_t, the dimension of the product
  int totalDim() const;
  const PrimeField& field() const { return field_; }

  std::size_t numVariables() const { return groupOf_.size(); }
  std::size_t groupOffset(std::size_t i) const { return offsets_[i]; }
  std::size_t groupSize(std::size_t i) const { return dims_[i] + 1; }
  std::size_t groupOf(std::size_t var) const { return groupOf_[var]; }
  std::size_t variable(std::size_t group, std::size_t j) const { return offsets_[group] + j; }

  Multidegree unit(std::size_t i) const { return Multidegree::unit(factors(), i); }
  Multidegree zero() const { return Multidegree(factors()); }
  /// (1, ..., 1)
  Multidegree ones() const { return Multidegree(factors(), 1); }

  /// Degree of an exterior monomial; componentwise <= 0.
  Multidegree exteriorDegree(ExtMask m) const;
  /// Degree of a monomial of S from its exponent vector.
  Multidegree polynomialDegree(const std::vector<int>& exps) const;

  /// Position of an exterior monomial inside the lex-ordered basis of its
  /// graded piece.
  std::uint32_t exteriorIndex(ExtMask m) const { return extIndex_->at(m); }
  /// Lex-ordered basis of E_c (empty unless -(n+1) <= c <= 0).
  const std::vector<ExtMask>& exteriorBasis(const Multidegree& c) const;

  friend bool operator==(const ProductSpace& a, const ProductSpace& b) {
    return a.dims_ == b.dims_ && a.field_ == b.field_;
  }

private:
  struct ExteriorTables;

  std::vector<int> dims_;
  PrimeField field_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> groupOf_;
  std::shared_ptr<const std::vector<std::uint32_t>> extIndex_;
  std::shared_ptr<const ExteriorTables> extBases_;
};

/// Graded dimensions
std::uint64_t binomial(int n, int k);
std::uint64_t dimSPiece(const ProductSpace& space, const Multidegree& d);
std::uint64_t dimEPiece(const ProductSpace& space, const Multidegree& a);

/// Lex order on sets of variables, compared as ascending index lists.
inline bool maskLexLess(ExtMask a, ExtMask b) {
  ExtMask x = a ^ b;
  if (x == 0)
    return false;
  return (a & (x & (~x + 1))) != 0;
}

} // namespace tate
