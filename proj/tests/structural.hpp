#pragma once

// Structural checks run on random presented modules by the property suite
// and by the acceptance runner.

#include <sstream>
#include <string>

#include "support.hpp"

namespace testsupport {

struct StructuralResult {
  bool squareZeroSymbolic = true;
  bool squareZeroDegreewise = true;
  bool minimal = true;
  bool cornerInvariant = true;
  bool sectionsMatchHilbert = true;
  std::string detail;

  bool ok() const {
    return squareZeroSymbolic && squareZeroDegreewise && minimal && cornerInvariant &&
           sectionsMatchHilbert;
  }
};

inline tate::LabeledFreeComplex withoutPadding(const tate::LabeledFreeComplex& c) {
  return c.subquotient([](int, const tate::FreeSummand& s) { return !s.padding; });
}

/// Window [b-(2,..,2), b-(1,..,1)] around the regularity b of m.
inline StructuralResult structuralChecks(const tate::PresentedModule& m, unsigned threads = 1) {
  using namespace tate;
  StructuralResult r;
  std::ostringstream why;
  const auto& space = m.space();
  Multidegree b = coarseRegularity(m);
  Multidegree high = b - space.ones();
  Multidegree low = high - space.ones();

  TateOptions opts;
  opts.threads = threads;
  opts.regularity.threads = threads;
  LabeledFreeComplex w = tateResolution(m, low, high, opts);

  if (!squareZeroFailuresSymbolic(w).empty()) {
    r.squareZeroSymbolic = false;
    why << " d^2 symbolic";
  }
  if (!squareZeroFailuresDegreewise(w, box(low - space.ones(), high)).empty()) {
    r.squareZeroDegreewise = false;
    why << " d^2 degreewise";
  }
  if (hasUnitEntries(w)) {
    r.minimal = false;
    why << " unit entry";
  }

  TateOptions shifted = opts;
  shifted.corner = b + space.ones();
  LabeledFreeComplex w2 = tateResolution(m, low, high, shifted);
  if (!(betti(withoutPadding(w)).perLabel == betti(withoutPadding(w2)).perLabel)) {
    r.cornerInvariant = false;
    why << " window depends on the corner";
  }

  Multidegree hlow = b + space.ones();
  Multidegree hhigh = hlow + space.ones();
  CohomologyTable table = eulerPolynomialTable(m, hlow, hhigh, [&] {
    TateOptions o = boxMode();
    o.threads = threads;
    return o;
  }());
  for (const auto& [d, e] : table.entries) {
    bool pure = e.coefficients().size() <= 1;
    if (!pure || e.coefficient(0) != m.dim(d)) {
      r.sectionsMatchHilbert = false;
      why << " h0 " << d.toString() << "=" << e.toString() << " vs dim " << m.dim(d);
    }
  }
  r.detail = why.str();
  return r;
}

} // namespace testsupport
