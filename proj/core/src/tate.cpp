#include "tate/tate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tate/parallel.hpp"

namespace tate {

namespace {

// Position of the summand that owns coordinate idx.
std::size_t locate(const DegreeLayout& l, std::size_t idx) {
  auto it = std::upper_bound(l.active.begin(), l.active.end(), idx,
                             [&](std::size_t x, std::size_t s) { return x < l.offset[s]; });
  return *(it - 1);
}

Multidegree reach(const ProductSpace& space) { return space.dimsDegree() + space.ones(); }

void requireSameLength(const ProductSpace& space, const Multidegree& d, const char* what) {
  if (d.size() != space.factors())
    throw std::invalid_argument(std::string(what) + " has wrong length");
}

} // namespace

LabeledFreeComplex bggQuadrantOnLabels(const PresentedModule& m,
                                       std::vector<Multidegree> labels) {
  const auto& space = m.space();
  const auto& F = space.field();
  std::sort(labels.begin(), labels.end(), LexLess{});
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  struct Place {
    int index;
    std::size_t offset;
    std::size_t dim;
  };
  std::map<Multidegree, Place, LexLess> where;
  std::map<int, std::vector<FreeSummand>> terms;
  for (const auto& a : labels) {
    requireSameLength(space, a, "quadrant label");
    std::size_t dim = m.dim(a);
    if (dim == 0)
      continue;
    auto& term = terms[a.total()];
    where[a] = {a.total(), term.size(), dim};
    term.insert(term.end(), dim, FreeSummand{a, false});
  }

  LabeledFreeComplex c(space);
  for (auto& [d, term] : terms)
    c.setTerm(d, std::move(term));

  std::map<int, std::map<std::pair<std::size_t, std::size_t>, ExteriorElement>> entries;
  for (const auto& [a, src] : where)
    for (std::size_t i = 0; i < space.factors(); ++i) {
      auto tgt = where.find(a + space.unit(i));
      if (tgt == where.end())
        continue;
      auto& acc = entries[src.index];
      for (std::size_t j = 0; j < space.groupSize(i); ++j) {
        std::size_t var = space.variable(i, j);
        SparseMatrix action = m.variableAction(a, var);
        for (std::size_t k = 0; k < action.cols(); ++k)
          for (const auto& e : action.column(k)) {
            auto key = std::make_pair(tgt->second.offset + e.index, src.offset + k);
            auto [it, inserted] = acc.try_emplace(key, -space.unit(i));
            it->second.addTerm(ExtMask{1} << var, e.value, F);
          }
      }
    }
  for (auto& [d, acc] : entries) {
    ExteriorMatrix mat(c.rank(d + 1), c.rank(d));
    for (auto& [key, e] : acc)
      mat.set(key.first, key.second, std::move(e));
    c.setDifferential(d, std::move(mat));
  }
  c.setOrientation("quadrant: M_a (x) E(a) at index |a|; differentials raise the index");
  return c;
}

LabeledFreeComplex bggQuadrantComplex(const PresentedModule& m, const Multidegree& b, int steps) {
  requireSameLength(m.space(), b, "corner");
  if (steps < 0)
    throw std::invalid_argument("quadrant steps must be >= 0");
  std::vector<Multidegree> labels;
  for (const auto& a : degreeBox(b, b + constantDegree(b.size(), steps)))
    if ((a - b).total() <= steps)
      labels.push_back(a);
  return bggQuadrantOnLabels(m, std::move(labels));
}

QuadrantReport verifyQuadrantExactness(const PresentedModule& m, const Multidegree& b,
                                       int margin, unsigned threads) {
  const auto& space = m.space();
  requireSameLength(space, b, "corner");
  if (margin < 1)
    throw std::invalid_argument("verification margin must be >= 1");
  const Multidegree r = reach(space);
  auto degrees = degreeBox(b - r, b + constantDegree(b.size(), margin));
  std::vector<std::vector<HomologyEntry>> found(degrees.size());
  parallelFor(degrees.size(), threads, [&](std::size_t k) {
    const Multidegree& delta = degrees[k];
    // Only labels delta <= a <= delta + n + 1 meet degree delta.
    auto local = bggQuadrantOnLabels(m, degreeBox(componentwiseMax(b, delta), delta + r));
    std::vector<int> indices;
    for (const auto& [d, term] : local.terms())
      if (d > b.total())
        indices.push_back(d);
    if (!indices.empty())
      found[k] = degreewiseHomology(local, {delta}, indices);
  });
  QuadrantReport report{b, margin, {}};
  for (auto& f : found)
    report.failures.insert(report.failures.end(), f.begin(), f.end());
  return report;
}

Multidegree coarseRegularity(const PresentedModule& m, const RegularityOptions& opts) {
  const auto& space = m.space();
  Multidegree b = space.zero();
  for (const auto& g : m.generatorDegrees())
    b = componentwiseMax(b, g);
  for (const auto& c : m.relationDegrees())
    b = componentwiseMax(b, c);
  for (int k = 0;; ++k) {
    if (verifyQuadrantExactness(m, b, opts.margin, opts.threads).exact())
      return b;
    if (k >= opts.cap)
      throw RegularityError("regularity heuristic failed; last degree tried " + b.toString(), b);
    b = b + space.ones();
  }
}

CornerData cornerData(const PresentedModule& m, const Multidegree& b) {
  const auto& space = m.space();
  requireSameLength(space, b, "corner");
  std::vector<Multidegree> labels{b};
  for (std::size_t i = 0; i < space.factors(); ++i)
    labels.push_back(b + space.unit(i));
  auto q = bggQuadrantOnLabels(m, labels);
  const int d = b.total();
  return CornerData{space, b, q.term(d), q.term(d + 1), q.differential(d)};
}

std::vector<ResolutionStep> resolveKernel(const CornerData& k, const ResolutionOptions& opts) {
  const auto& space = k.space;
  const auto& F = space.field();
  const int N = space.totalDim();
  const int t = static_cast<int>(space.factors());
  const Multidegree r = reach(space);

  std::vector<FreeSummand> A = k.source;
  std::vector<FreeSummand> B = k.target;
  ExteriorMatrix phi = k.map;
  std::vector<ResolutionStep> out;

  for (int step = 0; step < opts.steps && !A.empty(); ++step) {
    const int d = k.corner.total() - t - step;
    auto inBand = [&](const Multidegree& delta) {
      int s = delta.total();
      return !opts.band || (s >= d - N && s <= d + 1);
    };

    std::set<Multidegree, LexLess> labels;
    for (const auto& s : A)
      labels.insert(s.label);
    std::set<Multidegree, LexLess> candidates;
    for (const auto& a : labels)
      for (auto& delta : degreeBox(a - r, a))
        if (inBand(delta) && (!opts.keep || opts.keep(delta)))
          candidates.insert(std::move(delta));
    std::vector<Multidegree> degrees(candidates.begin(), candidates.end());
    std::map<Multidegree, std::size_t, LexLess> slot;
    for (std::size_t i = 0; i < degrees.size(); ++i)
      slot[degrees[i]] = i;

    std::vector<DegreeLayout> layouts(degrees.size());
    std::vector<SparseMatrix> kernels(degrees.size());
    parallelFor(degrees.size(), opts.threads, [&](std::size_t i) {
      const auto& delta = degrees[i];
      layouts[i] = degreeLayout(space, A, delta);
      auto target = degreeLayout(space, B, delta);
      kernels[i] = kernelBasis(degreewiseMatrix(space, phi, A, layouts[i], B, target, delta), F);
    });

    // Minimal generators: K_delta modulo the span of K_{delta+e_i} * v_(i,j).
    std::vector<std::vector<SparseVector>> generators(degrees.size());
    parallelFor(degrees.size(), opts.threads, [&](std::size_t i) {
      const auto& delta = degrees[i];
      const auto& ker = kernels[i];
      if (ker.cols() == 0 || (opts.band && delta.total() > d))
        return;
      EchelonBasis decomposable(F, layouts[i].dim);
      for (std::size_t g = 0; g < space.factors() && decomposable.rank() < ker.cols(); ++g) {
        Multidegree up = delta + space.unit(g);
        auto it = slot.find(up);
        if (it == slot.end())
          continue;
        const auto& upLayout = layouts[it->second];
        const auto& upKer = kernels[it->second];
        for (std::size_t j = 0; j < space.groupSize(g); ++j) {
          const ExtMask v = ExtMask{1} << space.variable(g, j);
          for (std::size_t c = 0; c < upKer.cols(); ++c) {
            SparseVector y;
            for (const auto& e : upKer.column(c)) {
              std::size_t s = locate(upLayout, e.index);
              ExtMask mk = space.exteriorBasis(up - A[s].label)[e.index - upLayout.offset[s]];
              if (mk & v)
                continue;
              Coeff val = wedgeSign(mk, v) < 0 ? F.neg(e.value) : e.value;
              y.push_back({static_cast<Index>(layouts[i].offset[s] + space.exteriorIndex(mk | v)),
                           val});
            }
            canonicalize(y, F);
            decomposable.insert(y);
            if (decomposable.rank() == ker.cols())
              break;
          }
        }
      }
      for (std::size_t c = 0; c < ker.cols(); ++c)
        if (decomposable.insert(ker.column(c)))
          generators[i].push_back(ker.column(c));
    });

    ResolutionStep next;
    std::vector<std::map<std::size_t, ExteriorElement>> columns;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      const auto& delta = degrees[i];
      for (const auto& x : generators[i]) {
        next.summands.push_back({delta, false});
        std::map<std::size_t, ExteriorElement> col;
        for (const auto& e : x) {
          std::size_t s = locate(layouts[i], e.index);
          Multidegree deg = delta - A[s].label;
          ExtMask mk = space.exteriorBasis(deg)[e.index - layouts[i].offset[s]];
          auto [it, inserted] = col.try_emplace(s, deg);
          it->second.addTerm(mk, e.value, F);
        }
        columns.push_back(std::move(col));
      }
    }
    if (next.summands.empty())
      break;
    next.map = ExteriorMatrix(A.size(), next.summands.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (auto& [s, e] : columns[c])
        next.map.set(s, c, std::move(e));
    out.push_back(next);
    B = std::move(A);
    A = std::move(next.summands);
    phi = std::move(next.map);
  }
  return out;
}

LabeledFreeComplex minimalFreeResolutionOverE(const CornerData& k, const Multidegree& lowLabel,
                                              int maxSteps) {
  requireSameLength(k.space, lowLabel, "low label");
  const Multidegree floor = lowLabel - reach(k.space);
  ResolutionOptions opts;
  opts.keep = [floor](const Multidegree& a) { return leq(floor, a); };
  opts.steps = maxSteps;
  auto steps = resolveKernel(k, opts);
  LabeledFreeComplex c(k.space);
  const int top = k.corner.total() - 1;
  for (std::size_t s = 0; s < steps.size(); ++s)
    c.setTerm(top - static_cast<int>(s), steps[s].summands);
  for (std::size_t s = 1; s < steps.size(); ++s)
    c.setDifferential(top - static_cast<int>(s), steps[s].map);
  c.setOrientation("tail: F_k at index |b|-1-k; differentials raise the index");
  return c;
}

namespace {

void requireExactQuadrant(const PresentedModule& m, const Multidegree& c, const TateOptions& opts) {
  auto report = verifyQuadrantExactness(m, c, opts.regularity.margin, opts.threads);
  if (!report.exact()) {
    const auto& f = report.failures.front();
    throw ExactnessError("quadrant complex at " + c.toString() + " is not exact in degree " +
                             f.degree.toString() + " at index " + std::to_string(f.index),
                         f.degree);
  }
}

} // namespace

Multidegree tateCorner(const PresentedModule& m, const Multidegree& high, const TateOptions& opts) {
  const Multidegree floor = high + m.space().ones();
  if (opts.corner) {
    if (!leq(floor, *opts.corner))
      throw std::invalid_argument("corner " + opts.corner->toString() + " must be >= " +
                                  floor.toString());
    requireExactQuadrant(m, *opts.corner, opts);
    return *opts.corner;
  }
  return componentwiseMax(coarseRegularity(m, opts.regularity), floor);
}

LabeledFreeComplex tateResolution(const PresentedModule& m, const Multidegree& low,
                                  const Multidegree& high, const TateOptions& opts) {
  const auto& space = m.space();
  requireSameLength(space, low, "low");
  requireSameLength(space, high, "high");
  if (!leq(low, high))
    throw std::invalid_argument("window needs low <= high");
  const Multidegree b = tateCorner(m, high, opts);
  const int t = static_cast<int>(space.factors());
  const int N = space.totalDim();
  const int top = b.total() - t;

  ResolutionOptions ropts;
  ropts.band = opts.band;
  ropts.threads = opts.threads;
  ropts.steps = std::max(0, top - low.total() + 1);
  if (opts.mode == TateOptions::Mode::Full) {
    const int floor = low.total() - N;
    ropts.keep = [floor](const Multidegree& a) { return a.total() >= floor; };
  } else {
    ropts.keep = [low](const Multidegree& a) { return leq(low, a); };
  }
  auto steps = resolveKernel(cornerData(m, b), ropts);

  LabeledFreeComplex c(space);
  for (std::size_t s = 0; s < steps.size(); ++s) {
    auto summands = steps[s].summands;
    for (auto& x : summands)
      x.padding = !(leq(low, x.label) && leq(x.label, high));
    c.setTerm(top - static_cast<int>(s), std::move(summands));
  }
  for (std::size_t s = 1; s < steps.size(); ++s)
    c.setDifferential(top - static_cast<int>(s), steps[s].map);
  c.setCoverage({low, high});
  c.setOrientation("tate: E(a) at index d carries H^(d-|a|)(F(a)); corner " + b.toString() +
                   "; differentials raise the index");
  return c;
}

LabeledFreeComplex cornerComplex(const PresentedModule& m, const Multidegree& c,
                                 const Multidegree& low, const Multidegree& high,
                                 const TateOptions& opts) {
  const auto& space = m.space();
  requireSameLength(space, c, "corner");
  requireSameLength(space, low, "low");
  requireSameLength(space, high, "high");
  if (!leq(low, c) || !leq(c, high))
    throw std::invalid_argument("corner complex needs low <= c <= high");
  requireExactQuadrant(m, c, opts);

  LabeledFreeComplex out = bggQuadrantComplex(m, c, high.total() - c.total());
  const Multidegree floor = low - space.dimsDegree();
  ResolutionOptions ropts;
  ropts.keep = [floor](const Multidegree& a) { return leq(floor, a); };
  ropts.steps = std::max(0, c.total() - low.total() - 1);
  ropts.band = opts.band;
  ropts.threads = opts.threads;
  auto steps = resolveKernel(cornerData(m, c), ropts);

  const int top = c.total() - 1;
  for (std::size_t s = 0; s < steps.size(); ++s)
    out.setTerm(top - static_cast<int>(s), steps[s].summands);
  for (std::size_t s = 0; s < steps.size(); ++s)
    out.setDifferential(top - static_cast<int>(s), steps[s].map);
  out.setCoverage({low, high});
  out.setOrientation("corner: quadrant M_a (x) E(a) at |a|, tail F_k at |c|-1-k; corner " +
                     c.toString() + "; differentials raise the index");
  return out;
}

void validateFactorSet(const ProductSpace& space, const std::vector<std::size_t>& factors) {
  if (factors.empty() || factors.size() >= space.factors())
    throw std::invalid_argument("factor set must be a proper nonempty subset");
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k] >= space.factors())
      throw std::invalid_argument("factor index out of range");
    if (k > 0 && factors[k] <= factors[k - 1])
      throw std::invalid_argument("factor set must be increasing");
  }
}

LabeledFreeComplex strand(const LabeledFreeComplex& t, const Multidegree& c,
                          const std::vector<std::size_t>& retained) {
  const auto& space = t.space();
  requireSameLength(space, c, "strand anchor");
  validateFactorSet(space, retained);
  std::vector<bool> kept(space.factors(), false);
  for (std::size_t i : retained)
    kept[i] = true;
  if (t.coverage())
    for (std::size_t i = 0; i < space.factors(); ++i)
      if (!kept[i] && (c[i] < t.coverage()->low[i] || c[i] > t.coverage()->high[i]))
        throw CoverageError("window " + t.coverage()->low.toString() + ".." +
                            t.coverage()->high.toString() + " does not contain the strand at " +
                            c.toString());
  auto s = t.subquotient([&](int, const FreeSummand& x) {
    for (std::size_t i = 0; i < space.factors(); ++i)
      if (!kept[i] && x.label[i] != c[i])
        return false;
    return true;
  });
  if (t.coverage()) {
    Coverage cov = *t.coverage();
    for (std::size_t i = 0; i < space.factors(); ++i)
      if (!kept[i])
        cov.low[i] = cov.high[i] = c[i];
    s.setCoverage(cov);
  }
  return s;
}

LabeledFreeComplex beilinsonWindow(const LabeledFreeComplex& t) {
  const auto& space = t.space();
  const Multidegree lo = -space.dimsDegree();
  const Multidegree hi = space.zero();
  if (t.coverage() && !(leq(t.coverage()->low, lo) && leq(hi, t.coverage()->high)))
    throw CoverageError("window " + t.coverage()->low.toString() + ".." +
                        t.coverage()->high.toString() + " does not cover " + lo.toString() +
                        ".." + hi.toString());
  auto w = t.subquotient(
      [&](int, const FreeSummand& x) { return leq(lo, x.label) && leq(x.label, hi); });
  w.setCoverage({lo, hi});
  return w;
}

LabeledFreeComplex restrictToFactors(const LabeledFreeComplex& c,
                                     const std::vector<std::size_t>& retained) {
  const auto& space = c.space();
  validateFactorSet(space, retained);
  std::vector<int> dims;
  for (std::size_t i : retained)
    dims.push_back(space.dim(i));
  ProductSpace sub(dims, space.field());

  std::vector<int> varMap(space.numVariables(), -1);
  for (std::size_t k = 0; k < retained.size(); ++k)
    for (std::size_t j = 0; j < space.groupSize(retained[k]); ++j)
      varMap[space.variable(retained[k], j)] = static_cast<int>(sub.variable(k, j));
  auto project = [&](const Multidegree& a) {
    Multidegree p(retained.size());
    for (std::size_t k = 0; k < retained.size(); ++k)
      p[k] = a[retained[k]];
    return p;
  };

  LabeledFreeComplex out(sub);
  for (const auto& [d, term] : c.terms()) {
    std::vector<FreeSummand> projected;
    for (const auto& s : term)
      projected.push_back({project(s.label), s.padding});
    out.setTerm(d, std::move(projected));
  }
  for (const auto& [d, m] : c.differentials()) {
    ExteriorMatrix r(m.rows(), m.cols());
    for (std::size_t s = 0; s < m.cols(); ++s)
      for (const auto& [row, e] : m.column(s)) {
        ExteriorElement x(project(e.degree()));
        for (const auto& [mask, coef] : e.terms()) {
          ExtMask nm = 0;
          for (std::size_t v = 0; v < space.numVariables(); ++v)
            if (mask & (ExtMask{1} << v)) {
              if (varMap[v] < 0)
                throw std::invalid_argument("differential involves an omitted factor");
              nm |= ExtMask{1} << varMap[v];
            }
          x.addTerm(nm, coef, space.field());
        }
        r.set(row, s, std::move(x));
      }
    out.setDifferential(d, std::move(r));
  }
  if (c.coverage())
    out.setCoverage({project(c.coverage()->low), project(c.coverage()->high)});
  out.setOrientation(c.orientation());
  return out;
}

} // namespace tate
