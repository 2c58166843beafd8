#pragma once

/**
 * @file beilinson.hpp
 * @brief The U functor from Beilinson windows to complexes of S-modules.
 *
 * A window summand E(a), -n <= a <= 0, goes to U^p with p = -a, the external
 * product of the bundles Omega^{p_i}(p_i).  Per factor, p_i = 0 contributes S
 * and p_i > 0 contributes the Koszul presentation with generators
 * Lambda^{p_i+1} W_i in degree e_i and relations Lambda^{p_i+2} W_i in degree
 * 2 e_i.  A generator w stands for kappa_A(w) inside Lambda(W) (x) S, where
 * A = {i : p_i > 0}, kappa_i = sum_j x_(i,j) * contraction by v_(i,j), and
 * kappa_A = kappa_{i1} ... kappa_{im} for i1 < ... < im.  An exterior
 * element e acts by contraction, so U is a functor and d^2 = 0 carries over.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tate/tate.hpp"

namespace tate {

/// Sparse matrix of homogeneous polynomials.
class PolynomialMatrix {
public:
  using Key = std::pair<std::size_t, std::size_t>; // (row, col)

  PolynomialMatrix() = default;
  PolynomialMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::map<Key, SPolynomial>& entries() const { return entries_; }
  const SPolynomial* find(std::size_t row, std::size_t col) const;

  /// Adds p to entry (row, col).
  void add(std::size_t row, std::size_t col, const SPolynomial& p, const ProductSpace& space);
  /// Copies m into the block starting at (row0, col0).
  void addBlock(std::size_t row0, std::size_t col0, const PolynomialMatrix& m,
                const ProductSpace& space);

  friend bool operator==(const PolynomialMatrix&, const PolynomialMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Key, SPolynomial> entries_;
};

/// Matrix of a graded map of presented modules in degree d; column k of f is
/// the image of generator k of the source.
SparseMatrix homomorphismMatrix(const PresentedModule& source, const PresentedModule& target,
                                const PolynomialMatrix& f, const Multidegree& d);

class SModuleComplex {
public:
  explicit SModuleComplex(ProductSpace space) : space_(std::move(space)) {}

  const ProductSpace& space() const { return space_; }
  const std::map<int, PresentedModule>& terms() const { return terms_; }
  /// nullptr when the index carries no term.
  const PresentedModule* term(int d) const;
  void setTerm(int d, PresentedModule m);

  /// Differential from term d to term d+1.
  const std::map<int, PolynomialMatrix>& differentials() const { return differentials_; }
  /// Checks shape and that every entry has degree genDeg(source) - genDeg(target).
  void setDifferential(int d, PolynomialMatrix m);

  std::size_t dimAt(int d, const Multidegree& delta) const;
  SparseMatrix matrixAt(int d, const Multidegree& delta) const;

  friend bool operator==(const SModuleComplex& a, const SModuleComplex& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_ && a.differentials_ == b.differentials_;
  }

private:
  ProductSpace space_;
  std::map<int, PresentedModule> terms_;
  std::map<int, PolynomialMatrix> differentials_;
};

/// Pairs (d, delta) where the degreewise composite d_{d+1} d_d is nonzero.
std::vector<std::pair<int, Multidegree>>
squareZeroFailures(const SModuleComplex& c, const std::vector<Multidegree>& degrees);

/// dim H^d(C)_delta
std::size_t homologyDim(const SModuleComplex& c, int d, const Multidegree& delta);

struct BeilinsonBundle {
  Multidegree exponent;
  PresentedModule presentation;
  /// Generator k stands for kappa_A(generators[k]).
  std::vector<ExtMask> generators;
};

/// U^p for 0 <= p <= n.
BeilinsonBundle beilinsonBundlePresentation(const ProductSpace& space, const Multidegree& p);

/// The map U^p -> U^{p'} induced by g, where p' = p + deg(g).  Rows index
/// the generators of U^{p'}, columns those of U^p.
PolynomialMatrix beilinsonMapEntry(const ProductSpace& space, const ExteriorElement& g,
                                   const Multidegree& p, const Multidegree& pTarget);

/// Applies U to a complex whose labels lie in [-n, 0].
SModuleComplex applyU(const LabeledFreeComplex& window);

/// U of the Beilinson window of the Tate resolution of M.
SModuleComplex beilinsonMonad(const PresentedModule& m, TateOptions opts = boxMode());

struct MonadReport {
  struct Mismatch {
    int index;
    Multidegree degree;
    std::size_t got;
    std::size_t expected;
  };
  Multidegree low;
  Multidegree high;
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
};

/// Compares dim H^0(B)_d with dim M_d and checks H^i(B)_d = 0 for i != 0,
/// for every d in [low, high].
MonadReport verifyMonad(const SModuleComplex& b, const PresentedModule& m, const Multidegree& low,
                        const Multidegree& high, unsigned threads = 1);

/// Componentwise max of all generator degrees of the terms, plus (1,..,1).
Multidegree defaultVerificationLow(const SModuleComplex& b);

/// Beilinson monad over the product of the retained factors for the strand
/// of the Tate resolution at 0 on the omitted factors.
SModuleComplex directImageComplex(const PresentedModule& m, const std::vector<std::size_t>& retained,
                                  TateOptions opts = boxMode());

/// Term by term description followed by the differentials.
std::string renderSModuleComplex(const SModuleComplex& c);

} // namespace tate
