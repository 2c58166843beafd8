#pragma once

/**
 * @file cohomology.hpp
 * @brief Cohomology tables read off Tate windows, and the Kunneth closed form
 * for line bundles.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tate/tate.hpp"

namespace tate {

/// sum_i dim H^i * h^i
class EulerPolynomial {
public:
  EulerPolynomial() = default;
  explicit EulerPolynomial(std::vector<std::uint64_t> coefficients);

  std::uint64_t coefficient(std::size_t i) const {
    return i < c_.size() ? c_[i] : 0;
  }
  const std::vector<std::uint64_t>& coefficients() const { return c_; }
  void add(std::size_t i, std::uint64_t amount);
  bool isZero() const { return c_.empty(); }
  /// Number of nonzero coefficients.
  std::size_t termCount() const;

  friend bool operator==(const EulerPolynomial&, const EulerPolynomial&) = default;
  friend EulerPolynomial operator*(const EulerPolynomial& a, const EulerPolynomial& b);

  /// "0", "3", "h", "2h", "h3", "3h2", terms joined with "+"
  std::string toString() const;

private:
  void trim();
  std::vector<std::uint64_t> c_; // no trailing zeros
};

struct CohomologyTable {
  Multidegree low;
  Multidegree high;
  std::map<Multidegree, EulerPolynomial, LexLess> entries;

  const EulerPolynomial& at(const Multidegree& a) const;
};

/// Counts the non-padding summands of a Tate window: E(a) at index d adds
/// h^{d-|a|} to the entry of a.
CohomologyTable decodeCohomology(const LabeledFreeComplex& window, const Multidegree& low,
                                 const Multidegree& high);

/// Box-mode Tate window over [low, high], decoded.
CohomologyTable eulerPolynomialTable(const PresentedModule& m, const Multidegree& low,
                                     const Multidegree& high, TateOptions opts = boxMode());

/// Rows run from high_2 down to low_2, columns from low_1 up to high_1.
std::string cohomologyMatrix(const CohomologyTable& table);
std::string cohomologyMatrix(const PresentedModule& m, const Multidegree& low,
                             const Multidegree& high, TateOptions opts = boxMode());

/// Cohomology of O(a) on P^{n_1} x ... x P^{n_t}.
EulerPolynomial kunnethLineBundle(const std::vector<int>& dims, const Multidegree& a);

} // namespace tate
