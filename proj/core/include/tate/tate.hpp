#pragma once

/**
 * @file tate.hpp
 * @brief BGG quadrant complexes, corner kernels, resolutions over E and the
 * complexes cut out of the Tate resolution.
 *
 * Index conventions.  In a Tate window the summand E(a) at index d carries
 * H^{d-|a|}(F(a)).  The quadrant term M_a (x) E(a) sits at index |a|.  The
 * kernel P of the first quadrant map at the corner b is resolved by free
 * modules F_0, F_1, ...; F_k sits at index |b|-1-k in a corner complex and at
 * Tate index |b|-t-k in a Tate window.
 */

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tate/free_complex.hpp"
#include "tate/presented_module.hpp"

namespace tate {

/// The propose-and-verify regularity search gave up.
class RegularityError : public std::runtime_error {
public:
  RegularityError(const std::string& what, Multidegree last)
      : std::runtime_error(what), lastDegree(std::move(last)) {}
  Multidegree lastDegree;
};

/// A requested subcomplex is not contained in the computed window.
class CoverageError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// The quadrant complex is not exact where a corner complex needs it.
class ExactnessError : public std::runtime_error {
public:
  ExactnessError(const std::string& what, Multidegree degree)
      : std::runtime_error(what), failingDegree(std::move(degree)) {}
  Multidegree failingDegree;
};

/// Terms M_a (x) E(a) for b <= a, |a - b| <= steps; one summand per basis
/// vector of M_a, at index |a|.
LabeledFreeComplex bggQuadrantComplex(const PresentedModule& m, const Multidegree& b, int steps);

/// The quadrant complex restricted to an explicit set of labels (all >= b).
LabeledFreeComplex bggQuadrantOnLabels(const PresentedModule& m,
                                       std::vector<Multidegree> labels);

struct QuadrantReport {
  Multidegree corner;
  int margin = 0;
  /// Nonzero homology found, by index and internal degree.
  std::vector<HomologyEntry> failures;
  bool exact() const { return failures.empty(); }
};

/// Degreewise homology of the quadrant at b, away from the corner index |b|,
/// for internal degrees b-(n+1) <= delta <= b+margin*(1,..,1).
QuadrantReport verifyQuadrantExactness(const PresentedModule& m, const Multidegree& b,
                                       int margin, unsigned threads = 1);

struct RegularityOptions {
  int margin = 2;
  /// Number of (1,..,1) increments tried after the starting degree.
  int cap = 6;
  unsigned threads = 1;
};

/// First b in b0, b0+1, ... that passes verifyQuadrantExactness, where b0 is
/// the componentwise max of 0 and all generator and relation degrees.
Multidegree coarseRegularity(const PresentedModule& m, const RegularityOptions& opts = {});

/// The first quadrant map M_b (x) E(b) -> (+)_i M_{b+e_i} (x) E(b+e_i); its
/// kernel is what the tail resolves.
struct CornerData {
  ProductSpace space;
  Multidegree corner;
  std::vector<FreeSummand> source;
  std::vector<FreeSummand> target;
  ExteriorMatrix map;
};

CornerData cornerData(const PresentedModule& m, const Multidegree& b);

struct ResolutionOptions {
  /// Labels kept; must be upward closed.  Empty means keep everything.
  std::function<bool(const Multidegree&)> keep;
  /// Maximum number of free modules produced.
  int steps = 0;
  /// Restrict step k to internal degrees with |b|-t-k-N <= |delta| <= |b|-t-k+1.
  bool band = true;
  unsigned threads = 1;
};

/// One free module of a resolution and its map to the previous module (the
/// corner source for step 0).
struct ResolutionStep {
  std::vector<FreeSummand> summands;
  ExteriorMatrix map;
};

/// Minimal free resolution of ker(K.map), generated degree by degree.
std::vector<ResolutionStep> resolveKernel(const CornerData& k, const ResolutionOptions& opts);

/// The tail in corner indexing (F_k at |b|-1-k).  Keeps labels
/// a >= lowLabel - (n+1) and stops at the first empty step.
LabeledFreeComplex minimalFreeResolutionOverE(const CornerData& k, const Multidegree& lowLabel,
                                              int maxSteps = 64);

struct TateOptions {
  enum class Mode {
    /// Every tail summand of Tate index >= |low| (labels |a| >= |low| - N).
    Full,
    /// Only labels a >= low.
    Box,
  };
  Mode mode = Mode::Full;
  bool band = true;
  unsigned threads = 1;
  /// Overrides the corner; must be >= high + (1,..,1).
  std::optional<Multidegree> corner;
  RegularityOptions regularity;
};

inline TateOptions boxMode() {
  TateOptions o;
  o.mode = TateOptions::Mode::Box;
  return o;
}

/// max(coarseRegularity(M), high + (1,..,1)), or the override after its
/// quadrant has been checked (ExactnessError otherwise).
Multidegree tateCorner(const PresentedModule& m, const Multidegree& high, const TateOptions& opts);

/// Tate window: all summands with labels in [low, high] at Tate indices
/// |low| <= d <= |b|-t.  Other summands that occur are marked as padding.
LabeledFreeComplex tateResolution(const PresentedModule& m, const Multidegree& low,
                                  const Multidegree& high, const TateOptions& opts = {});

/// Tail_c -> bgg(M_{>=c}) in corner indexing, with tail labels >= low - n,
/// tail indices >= |low|+1 and quadrant labels |a| <= |high|.
LabeledFreeComplex cornerComplex(const PresentedModule& m, const Multidegree& c,
                                 const Multidegree& low, const Multidegree& high,
                                 const TateOptions& opts = {});

/// Summands whose labels equal c off the retained factors.  Labels and
/// indices are kept as in t.
LabeledFreeComplex strand(const LabeledFreeComplex& t, const Multidegree& c,
                          const std::vector<std::size_t>& retained);

/// Labels -n <= a <= 0.
LabeledFreeComplex beilinsonWindow(const LabeledFreeComplex& t);

/// Rewrites a complex whose differentials only involve the retained factors
/// as a complex over their product.  Labels are projected.
LabeledFreeComplex restrictToFactors(const LabeledFreeComplex& c,
                                     const std::vector<std::size_t>& retained);

/// Checks a factor set: sorted, unique, proper and nonempty.
void validateFactorSet(const ProductSpace& space, const std::vector<std::size_t>& factors);

} // namespace tate
