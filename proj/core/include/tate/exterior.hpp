#pragma once

#include <bit>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tate/product_space.hpp"
#include "tate/sparse_matrix.hpp"

namespace tate {

/// Sign of m1 ^ m2 relative to the ascending canonical order: the parity of
/// pairs (i in m1, j in m2) with i > j.  Callers check m1 & m2 == 0.
inline int wedgeSign(ExtMask m1, ExtMask m2) {
  int inversions = 0;
  while (m1) {
    int i = std::countr_zero(m1);
    m1 &= m1 - 1;
    inversions += std::popcount(m2 & ((ExtMask{1} << i) - 1));
  }
  return (inversions & 1) ? -1 : 1;
}

/**
 * Homogeneous element of the exterior algebra E.
 *
 * Terms are kept sorted by mask with nonzero coefficients.  The degree is
 * carried explicitly so that the zero element still knows where it lives.
 */
class ExteriorElement {
public:
  using Term = std::pair<ExtMask, Coeff>;

  ExteriorElement() = default;
  explicit ExteriorElement(Multidegree degree) : degree_(std::move(degree)) {}

  static ExteriorElement one(const ProductSpace& space);
  static ExteriorElement variable(const ProductSpace& space, std::size_t var);
  static ExteriorElement monomial(const ProductSpace& space, ExtMask m, Coeff c = 1);
  /// v_{vars[0]} ^ v_{vars[1]} ^ ... in the given order (sign applied).
  static ExteriorElement wedgeOf(const ProductSpace& space, const std::vector<std::size_t>& vars);

  const Multidegree& degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Coeff coefficient(ExtMask m) const;
  /// Coefficient of the monomial 1.
  Coeff constantTerm() const { return coefficient(0); }

  /// Adds c*m; the caller guarantees m has this element's degree.
  void addTerm(ExtMask m, Coeff c, const PrimeField& field);

  ExteriorElement& addScaled(const ExteriorElement& o, Coeff c, const PrimeField& field);
  ExteriorElement scaled(Coeff c, const PrimeField& field) const;

  friend bool operator==(const ExteriorElement&, const ExteriorElement&) = default;

  std::string toString(const ProductSpace& space) const;

private:
  Multidegree degree_;
  std::vector<Term> terms_;
};

/// Wedge product u ^ v.
ExteriorElement extMultiply(const ExteriorElement& u, const ExteriorElement& v,
                            const PrimeField& field);

/// Matrix of u |-> g ^ u from E_source to E_{source + deg g}, in the
/// lex-ordered monomial bases.
SparseMatrix multiplicationMatrixE(const ExteriorElement& g, const Multidegree& source,
                                   const ProductSpace& space);

std::ostream& operator<<(std::ostream& os, const ExteriorElement& e);

} // namespace tate
