#pragma once

#include <map>
#include <string>
#include <vector>

#include "tate/product_space.hpp"

namespace tate {

using Exponents = std::vector<int>;

/// Homogeneous element of the Cox ring S.
class SPolynomial {
public:
  SPolynomial() = default;
  explicit SPolynomial(Multidegree degree) : degree_(std::move(degree)) {}

  static SPolynomial monomial(const ProductSpace& space, Exponents exps, Coeff c = 1);
  static SPolynomial variable(const ProductSpace& space, std::size_t var, Coeff c = 1);
  static SPolynomial constant(const ProductSpace& space, Coeff c);

  const Multidegree& degree() const { return degree_; }
  const std::map<Exponents, Coeff>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Coeff coefficient(const Exponents& e) const;

  /// Adds c*x^e; x^e must have this polynomial's degree.
  void addTerm(const Exponents& e, Coeff c, const ProductSpace& space);
  SPolynomial& addScaled(const SPolynomial& o, Coeff c, const ProductSpace& space);

  friend bool operator==(const SPolynomial&, const SPolynomial&) = default;

  /// "x_(1,2)", "-x_(0,0)*x_(1,1)+2*x_(1,0)^2"
  std::string toString(const ProductSpace& space) const;

private:
  Multidegree degree_;
  std::map<Exponents, Coeff> terms_;
};

SPolynomial multiply(const SPolynomial& f, const SPolynomial& g, const ProductSpace& space);

/// Monomials of S_d, lex order with x_(0,0) > x_(0,1) > ... (group 0 most
/// significant).  Empty if some d_i < 0.
std::vector<Exponents> monomialBasis(const ProductSpace& space, const Multidegree& d);
/// Position of a monomial of degree d inside monomialBasis(space, d).
std::size_t monomialIndex(const ProductSpace& space, const Exponents& exps);

/// Lex-ordered basis of E_a as masks (same as space.exteriorBasis).
const std::vector<ExtMask>& exteriorMonomialBasis(const ProductSpace& space,
                                                  const Multidegree& a);

} // namespace tate
