#pragma once

/**
 * @file free_complex.hpp
 * @brief Bounded complexes of free graded E-modules with labeled summands.
 *
 * A summand with label a is E(a), its generator sitting in internal degree a,
 * so that E(a)_delta = E_{delta - a}.  Modules are right E-modules: a matrix
 * entry phi_ts acts by g_s * m |-> h_t * (phi_ts ^ m), and composition is
 * (psi phi)_us = sum_t psi_ut ^ phi_ts.
 *
 * Differentials raise the index.  The entry from a summand labeled a to one
 * labeled a' has degree a - a' (componentwise <= 0).
 */

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tate/exterior.hpp"
#include "tate/linalg.hpp"

namespace tate {

struct FreeSummand {
  Multidegree label;
  /// Set on summands outside the requested window.
  bool padding = false;

  friend bool operator==(const FreeSummand&, const FreeSummand&) = default;
};

/// Sparse matrix of exterior elements, stored by columns.
class ExteriorMatrix {
public:
  using Entry = std::pair<std::size_t, ExteriorElement>; // (row, value)

  ExteriorMatrix() = default;
  ExteriorMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const;

  /// Replaces entry (row, col); zero elements erase it.
  void set(std::size_t row, std::size_t col, ExteriorElement value);
  /// Entries of a column sorted by row.
  const std::vector<Entry>& column(std::size_t col) const { return columns_[col]; }
  /// Pointer to entry (row, col) or nullptr.
  const ExteriorElement* find(std::size_t row, std::size_t col) const;

  friend bool operator==(const ExteriorMatrix&, const ExteriorMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

/// (psi phi)_us = sum_t psi_ut ^ phi_ts
ExteriorMatrix compose(const ExteriorMatrix& psi, const ExteriorMatrix& phi,
                       const PrimeField& field);

/**
 * Coordinates of (+)_s E(a_s)_delta.  Summand s occupies
 * [offset[s], offset[s] + dim E_{delta - a_s}); inactive summands have
 * offset kInactive.
 */
struct DegreeLayout {
  static constexpr std::size_t kInactive = static_cast<std::size_t>(-1);
  std::vector<std::size_t> offset;
  std::vector<std::size_t> active; // active summands, increasing
  std::size_t dim = 0;
};

DegreeLayout degreeLayout(const ProductSpace& space, const std::vector<FreeSummand>& summands,
                          const Multidegree& delta);

/// Matrix of phi : (+)E(a_s)_delta -> (+)E(b_t)_delta in the layouts' bases.
SparseMatrix degreewiseMatrix(const ProductSpace& space, const ExteriorMatrix& phi,
                              const std::vector<FreeSummand>& source,
                              const DegreeLayout& sourceLayout,
                              const std::vector<FreeSummand>& target,
                              const DegreeLayout& targetLayout, const Multidegree& delta);

/// Label window and index range a complex is known to be complete on.
struct Coverage {
  Multidegree low;
  Multidegree high;
};

class LabeledFreeComplex {
public:
  explicit LabeledFreeComplex(ProductSpace space) : space_(std::move(space)) {}

  const ProductSpace& space() const { return space_; }

  const std::map<int, std::vector<FreeSummand>>& terms() const { return terms_; }
  /// Empty vector when the index carries no term.
  const std::vector<FreeSummand>& term(int d) const;
  std::size_t rank(int d) const { return term(d).size(); }
  void setTerm(int d, std::vector<FreeSummand> summands);

  /// Differential from term d to term d+1.
  const std::map<int, ExteriorMatrix>& differentials() const { return differentials_; }
  /// Zero matrix of the right shape when none was set.
  ExteriorMatrix differential(int d) const;
  void setDifferential(int d, ExteriorMatrix m);

  bool isZero() const;
  /// Smallest and largest index with a nonempty term.
  std::optional<std::pair<int, int>> indexRange() const;

  const std::string& orientation() const { return orientation_; }
  void setOrientation(std::string note) { orientation_ = std::move(note); }
  const std::optional<Coverage>& coverage() const { return coverage_; }
  void setCoverage(Coverage c) { coverage_ = std::move(c); }

  /// Term d in internal degree delta.
  std::size_t dimAt(int d, const Multidegree& delta) const;
  /// Differential d in internal degree delta.
  SparseMatrix matrixAt(int d, const Multidegree& delta) const;

  /// Keeps the summands accepted by keep; differentials are restricted.
  template <class Pred>
  LabeledFreeComplex subquotient(Pred keep) const;

  friend bool operator==(const LabeledFreeComplex& a, const LabeledFreeComplex& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_ && a.differentials_ == b.differentials_;
  }

private:
  LabeledFreeComplex restrictTo(const std::map<int, std::vector<std::size_t>>& kept) const;

  ProductSpace space_;
  std::map<int, std::vector<FreeSummand>> terms_;
  std::map<int, ExteriorMatrix> differentials_;
  std::string orientation_;
  std::optional<Coverage> coverage_;
};

template <class Pred>
LabeledFreeComplex LabeledFreeComplex::subquotient(Pred keep) const {
  std::map<int, std::vector<std::size_t>> kept;
  for (const auto& [d, summands] : terms_)
    for (std::size_t s = 0; s < summands.size(); ++s)
      if (keep(d, summands[s]))
        kept[d].push_back(s);
  return restrictTo(kept);
}

/// Indices d at which the composite d_{d+1} d_d is nonzero (exterior products).
std::vector<int> squareZeroFailuresSymbolic(const LabeledFreeComplex& c);
/// Pairs (d, delta) at which the degreewise composite is nonzero.
std::vector<std::pair<int, Multidegree>>
squareZeroFailuresDegreewise(const LabeledFreeComplex& c, const std::vector<Multidegree>& degrees);

/// True when some differential entry has a nonzero constant term.
bool hasUnitEntries(const LabeledFreeComplex& c);

struct BettiTable {
  /// (index d, row d - |a|) -> count
  std::map<std::pair<int, int>, std::size_t> entries;
  struct IndexLabelLess {
    bool operator()(const std::pair<int, Multidegree>& x,
                    const std::pair<int, Multidegree>& y) const {
      if (x.first != y.first)
        return x.first < y.first;
      return LexLess{}(x.second, y.second);
    }
  };
  /// (index d, label) -> count
  std::map<std::pair<int, Multidegree>, std::size_t, IndexLabelLess> perLabel;

  std::size_t total(int d) const;
  /// Totals for ascending indices lo..hi.
  std::vector<std::size_t> totals(int lo, int hi) const;
  std::vector<int> indices() const;
  std::vector<int> rows() const;
};

BettiTable betti(const LabeledFreeComplex& c);

/// Fixed-width layout: index header, a total line, then one line per row.
std::string renderBetti(const BettiTable& b);

struct HomologyEntry {
  int index;
  Multidegree degree;
  std::size_t dim;
};

/// Nonzero dims of H^d in the given internal degrees, for the given indices
/// (all indices carrying a term when empty).
std::vector<HomologyEntry> degreewiseHomology(const LabeledFreeComplex& c,
                                              const std::vector<Multidegree>& degrees,
                                              std::vector<int> indices = {});

} // namespace tate
