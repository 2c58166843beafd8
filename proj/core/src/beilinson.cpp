#include "tate/beilinson.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "tate/parallel.hpp"

namespace tate {

const SPolynomial* PolynomialMatrix::find(std::size_t row, std::size_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? nullptr : &it->second;
}

void PolynomialMatrix::add(std::size_t row, std::size_t col, const SPolynomial& p,
                           const ProductSpace& space) {
  if (row >= rows_ || col >= cols_)
    throw std::out_of_range("polynomial matrix entry out of range");
  if (p.isZero())
    return;
  auto [it, inserted] = entries_.try_emplace({row, col}, p.degree());
  it->second.addScaled(p, 1, space);
  if (it->second.isZero())
    entries_.erase(it);
}

void PolynomialMatrix::addBlock(std::size_t row0, std::size_t col0, const PolynomialMatrix& m,
                                const ProductSpace& space) {
  for (const auto& [key, p] : m.entries())
    add(row0 + key.first, col0 + key.second, p, space);
}

SparseMatrix homomorphismMatrix(const PresentedModule& source, const PresentedModule& target,
                                const PolynomialMatrix& f, const Multidegree& d) {
  const auto& space = source.space();
  const auto& F = space.field();
  auto src = source.gradedPiece(d);
  auto tgt = target.gradedPiece(d);
  std::vector<std::vector<std::pair<std::size_t, const SPolynomial*>>> byColumn(f.cols());
  for (const auto& [key, p] : f.entries())
    byColumn[key.second].push_back({key.first, &p});
  SparseMatrix m(tgt->dim(), src->dim());
  for (std::size_t j = 0; j < src->dim(); ++j) {
    const auto& lift = src->basisLift(j);
    SparseVector v;
    for (const auto& [row, p] : byColumn[lift.generator])
      for (const auto& [exps, c] : p->terms()) {
        Exponents e = exps;
        for (std::size_t k = 0; k < e.size(); ++k)
          e[k] += lift.exps[k];
        auto idx = tgt->ambientIndex(row, e);
        if (idx < 0)
          throw std::logic_error("homomorphism is not homogeneous of degree 0");
        v.push_back({static_cast<Index>(idx), c});
      }
    canonicalize(v, F);
    m.setColumn(j, tgt->project(v));
  }
  return m;
}

const PresentedModule* SModuleComplex::term(int d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? nullptr : &it->second;
}

void SModuleComplex::setTerm(int d, PresentedModule m) {
  if (!(m.space() == space_))
    throw std::invalid_argument("term over a different ring");
  terms_.insert_or_assign(d, std::move(m));
}

void SModuleComplex::setDifferential(int d, PolynomialMatrix m) {
  const PresentedModule* src = term(d);
  const PresentedModule* tgt = term(d + 1);
  std::size_t cols = src ? src->numGenerators() : 0;
  std::size_t rows = tgt ? tgt->numGenerators() : 0;
  if (m.rows() != rows || m.cols() != cols)
    throw std::invalid_argument("differential shape does not match its terms");
  for (const auto& [key, p] : m.entries()) {
    Multidegree want = src->generatorDegrees()[key.second] - tgt->generatorDegrees()[key.first];
    if (!(p.degree() == want))
      throw std::invalid_argument("differential entry (" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ") at index " + std::to_string(d) +
                                  " has degree " + p.degree().toString() + ", expected " +
                                  want.toString());
  }
  if (m.entries().empty())
    differentials_.erase(d);
  else
    differentials_.insert_or_assign(d, std::move(m));
}

std::size_t SModuleComplex::dimAt(int d, const Multidegree& delta) const {
  const PresentedModule* t = term(d);
  return t ? t->dim(delta) : 0;
}

SparseMatrix SModuleComplex::matrixAt(int d, const Multidegree& delta) const {
  const PresentedModule* src = term(d);
  const PresentedModule* tgt = term(d + 1);
  std::size_t cols = src ? src->dim(delta) : 0;
  std::size_t rows = tgt ? tgt->dim(delta) : 0;
  auto it = differentials_.find(d);
  if (!src || !tgt || it == differentials_.end())
    return SparseMatrix(rows, cols);
  return homomorphismMatrix(*src, *tgt, it->second, delta);
}

std::vector<std::pair<int, Multidegree>>
squareZeroFailures(const SModuleComplex& c, const std::vector<Multidegree>& degrees) {
  std::vector<std::pair<int, Multidegree>> bad;
  for (const auto& [d, m] : c.differentials()) {
    if (c.differentials().find(d + 1) == c.differentials().end())
      continue;
    for (const auto& delta : degrees)
      if (!multiply(c.matrixAt(d + 1, delta), c.matrixAt(d, delta), c.space().field()).isZero())
        bad.push_back({d, delta});
  }
  return bad;
}

std::size_t homologyDim(const SModuleComplex& c, int d, const Multidegree& delta) {
  std::size_t dim = c.dimAt(d, delta);
  if (dim == 0)
    return 0;
  const auto& F = c.space().field();
  return dim - rank(c.matrixAt(d, delta), F) - rank(c.matrixAt(d - 1, delta), F);
}

namespace {

struct Contracted {
  ExtMask mask;
  bool negative;
};

// Contraction by the dual of variable v.
bool contract(ExtMask mask, unsigned v, Contracted& out) {
  ExtMask bit = ExtMask{1} << v;
  if (!(mask & bit))
    return false;
  out.mask = mask & ~bit;
  out.negative = (std::popcount(mask & (bit - 1)) & 1) != 0;
  return true;
}

ExtMask groupMask(const ProductSpace& space, std::size_t i) {
  return ((ExtMask{1} << space.groupSize(i)) - 1) << space.groupOffset(i);
}

void checkExponent(const ProductSpace& space, const Multidegree& p) {
  if (p.size() != space.factors())
    throw std::invalid_argument("bundle exponent has wrong length");
  if (!leq(space.zero(), p) || !leq(p, space.dimsDegree()))
    throw std::invalid_argument("bundle exponent " + p.toString() + " outside 0.." +
                                space.dimsDegree().toString());
}

// Masks with p_i+1 variables in each factor with p_i > 0 and none elsewhere.
std::vector<ExtMask> bundleGenerators(const ProductSpace& space, const Multidegree& p) {
  std::vector<ExtMask> out;
  const std::size_t n = space.numVariables();
  for (ExtMask m = 0; m < (ExtMask{1} << n); ++m) {
    bool ok = true;
    for (std::size_t i = 0; i < space.factors() && ok; ++i) {
      int want = p[i] > 0 ? p[i] + 1 : 0;
      ok = std::popcount(m & groupMask(space, i)) == want;
    }
    if (ok)
      out.push_back(m);
  }
  std::sort(out.begin(), out.end(), maskLexLess);
  return out;
}

struct KoszulTerm {
  ExtMask mask;
  Coeff coef;
  Exponents exps;
};

// kappa_i applied to every term.
std::vector<KoszulTerm> applyKappa(const ProductSpace& space, std::size_t i,
                                   const std::vector<KoszulTerm>& in) {
  const auto& F = space.field();
  std::vector<KoszulTerm> out;
  for (const auto& t : in)
    for (std::size_t j = 0; j < space.groupSize(i); ++j) {
      unsigned v = static_cast<unsigned>(space.variable(i, j));
      Contracted c;
      if (!contract(t.mask, v, c))
        continue;
      KoszulTerm next{c.mask, c.negative ? F.neg(t.coef) : t.coef, t.exps};
      ++next.exps[v];
      out.push_back(std::move(next));
    }
  return out;
}

} // namespace

BeilinsonBundle beilinsonBundlePresentation(const ProductSpace& space, const Multidegree& p) {
  checkExponent(space, p);
  auto gens = bundleGenerators(space, p);
  std::map<ExtMask, std::size_t> index;
  for (std::size_t k = 0; k < gens.size(); ++k)
    index[gens[k]] = k;

  Multidegree genDeg = space.zero();
  for (std::size_t i = 0; i < space.factors(); ++i)
    if (p[i] > 0)
      genDeg[i] = 1;
  std::vector<Multidegree> genDegrees(gens.size(), genDeg);

  std::vector<Multidegree> colDegrees;
  std::vector<RelationEntry> rels;
  for (std::size_t i = 0; i < space.factors(); ++i) {
    if (p[i] == 0 || p[i] + 2 > space.dim(i) + 1)
      continue;
    Multidegree q = p;
    ++q[i];
    for (ExtMask y : bundleGenerators(space, q)) {
      std::size_t col = colDegrees.size();
      colDegrees.push_back(genDeg + space.unit(i));
      std::vector<KoszulTerm> start{{y, 1, Exponents(space.numVariables(), 0)}};
      for (const auto& t : applyKappa(space, i, start))
        rels.push_back({index.at(t.mask), col, SPolynomial::monomial(space, t.exps, t.coef)});
    }
  }
  return BeilinsonBundle{p, PresentedModule(space, std::move(genDegrees), std::move(colDegrees),
                                            std::move(rels)),
                         std::move(gens)};
}

PolynomialMatrix beilinsonMapEntry(const ProductSpace& space, const ExteriorElement& g,
                                   const Multidegree& p, const Multidegree& pTarget) {
  checkExponent(space, p);
  checkExponent(space, pTarget);
  if (!(p + g.degree() == pTarget))
    throw std::invalid_argument("map entry of degree " + g.degree().toString() + " cannot go " +
                                p.toString() + " -> " + pTarget.toString());
  const auto& F = space.field();
  auto srcGens = bundleGenerators(space, p);
  auto tgtGens = bundleGenerators(space, pTarget);
  std::map<ExtMask, std::size_t> tgtIndex;
  for (std::size_t k = 0; k < tgtGens.size(); ++k)
    tgtIndex[tgtGens[k]] = k;

  std::vector<std::size_t> A, Aprime, B;
  for (std::size_t i = 0; i < space.factors(); ++i) {
    if (p[i] > 0)
      A.push_back(i);
    if (pTarget[i] > 0)
      Aprime.push_back(i);
    else if (p[i] > 0)
      B.push_back(i);
  }
  // kappa_A = sigma * kappa_{A'} kappa_B
  std::size_t inversions = 0;
  for (std::size_t x : Aprime)
    for (std::size_t y : B)
      inversions += x > y;
  const bool sigmaNegative = (inversions & 1) != 0;

  PolynomialMatrix out(tgtGens.size(), srcGens.size());
  for (const auto& [e, coef] : g.terms()) {
    const int k = std::popcount(e);
    // iota_e w picks up (-1)^{|e||A|} when moved past kappa_A
    bool negative = sigmaNegative ^ (((k * static_cast<int>(A.size())) & 1) != 0);
    Coeff base = negative ? F.neg(coef) : coef;
    std::vector<unsigned> vars;
    for (unsigned v = 0; v < space.numVariables(); ++v)
      if (e & (ExtMask{1} << v))
        vars.push_back(v);
    for (std::size_t col = 0; col < srcGens.size(); ++col) {
      // iota_{u1 ^ ... ^ uk} = iota_{u1} o ... o iota_{uk}
      Contracted cur{srcGens[col], false};
      bool alive = true;
      for (auto it = vars.rbegin(); it != vars.rend() && alive; ++it) {
        Contracted next;
        alive = contract(cur.mask, *it, next);
        if (alive)
          cur = {next.mask, cur.negative != next.negative};
      }
      if (!alive)
        continue;
      std::vector<KoszulTerm> terms{
          {cur.mask, cur.negative ? F.neg(base) : base, Exponents(space.numVariables(), 0)}};
      for (auto it = B.rbegin(); it != B.rend(); ++it)
        terms = applyKappa(space, *it, terms);
      for (const auto& t : terms)
        out.add(tgtIndex.at(t.mask), col, SPolynomial::monomial(space, t.exps, t.coef), space);
    }
  }
  return out;
}

SModuleComplex applyU(const LabeledFreeComplex& window) {
  const auto& space = window.space();
  const Multidegree lo = -space.dimsDegree();
  std::map<Multidegree, BeilinsonBundle, LexLess> cache;
  auto bundle = [&](const Multidegree& label) -> const BeilinsonBundle& {
    if (!leq(lo, label) || !leq(label, space.zero()))
      throw CoverageError("label " + label.toString() + " is outside the Beilinson window");
    auto it = cache.find(label);
    if (it == cache.end())
      it = cache.emplace(label, beilinsonBundlePresentation(space, -label)).first;
    return it->second;
  };

  SModuleComplex out(space);
  std::map<int, std::vector<std::size_t>> offsets;
  for (const auto& [d, term] : window.terms()) {
    std::optional<PresentedModule> sum;
    auto& off = offsets[d];
    std::size_t count = 0;
    for (const auto& s : term) {
      const auto& u = bundle(s.label);
      off.push_back(count);
      count += u.presentation.numGenerators();
      sum = sum ? directSum(*sum, u.presentation) : u.presentation;
    }
    if (sum)
      out.setTerm(d, std::move(*sum));
  }
  for (const auto& [d, m] : window.differentials()) {
    const auto& src = window.term(d);
    const auto& tgt = window.term(d + 1);
    PolynomialMatrix f(out.term(d + 1)->numGenerators(), out.term(d)->numGenerators());
    for (std::size_t s = 0; s < m.cols(); ++s)
      for (const auto& [t, e] : m.column(s)) {
        auto block = beilinsonMapEntry(space, e, -src[s].label, -tgt[t].label);
        f.addBlock(offsets[d + 1][t], offsets[d][s], block, space);
      }
    out.setDifferential(d, std::move(f));
  }
  return out;
}

SModuleComplex beilinsonMonad(const PresentedModule& m, TateOptions opts) {
  const auto& space = m.space();
  auto t = tateResolution(m, -space.dimsDegree(), space.zero(), opts);
  return applyU(beilinsonWindow(t));
}

MonadReport verifyMonad(const SModuleComplex& b, const PresentedModule& m, const Multidegree& low,
                        const Multidegree& high, unsigned threads) {
  if (!(b.space() == m.space()))
    throw std::invalid_argument("monad and module live over different rings");
  if (!leq(low, high))
    throw std::invalid_argument("verification box needs low <= high");
  auto degrees = degreeBox(low, high);
  std::vector<int> indices;
  for (const auto& [d, term] : b.terms())
    indices.push_back(d);
  if (std::find(indices.begin(), indices.end(), 0) == indices.end())
    indices.push_back(0);
  std::sort(indices.begin(), indices.end());

  std::vector<std::vector<MonadReport::Mismatch>> found(degrees.size());
  parallelFor(degrees.size(), threads, [&](std::size_t k) {
    const auto& delta = degrees[k];
    for (int d : indices) {
      std::size_t got = homologyDim(b, d, delta);
      std::size_t expected = d == 0 ? m.dim(delta) : 0;
      if (got != expected)
        found[k].push_back({d, delta, got, expected});
    }
  });
  MonadReport report{low, high, degrees.size() * indices.size(), {}};
  for (auto& f : found)
    report.mismatches.insert(report.mismatches.end(), f.begin(), f.end());
  return report;
}

Multidegree defaultVerificationLow(const SModuleComplex& b) {
  Multidegree low = b.space().zero();
  for (const auto& [d, term] : b.terms())
    for (const auto& g : term.generatorDegrees())
      low = componentwiseMax(low, g);
  return low + b.space().ones();
}

SModuleComplex directImageComplex(const PresentedModule& m, const std::vector<std::size_t>& retained,
                                  TateOptions opts) {
  const auto& space = m.space();
  validateFactorSet(space, retained);
  Multidegree low = space.zero();
  for (std::size_t i : retained)
    low[i] = -space.dim(i);
  auto t = tateResolution(m, low, space.zero(), opts);
  auto s = strand(t, space.zero(), retained);
  return applyU(beilinsonWindow(restrictToFactors(s, retained)));
}

std::string renderSModuleComplex(const SModuleComplex& c) {
  const auto& space = c.space();
  std::ostringstream os;
  if (c.terms().empty())
    return "0\n";
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    const auto& [d, m] = *it;
    os << "index " << d << ": ";
    std::map<Multidegree, std::size_t, LexLess> degs;
    for (const auto& g : m.generatorDegrees())
      ++degs[g];
    if (m.numRelations() == 0)
      os << "free, ";
    else
      os << "cokernel, ";
    os << m.numGenerators() << " generators";
    for (const auto& [g, n] : degs)
      os << " " << n << "x" << g.toString();
    os << ", " << m.numRelations() << " relations\n";
    if (m.numRelations() > 0) {
      for (std::size_t r = 0; r < m.numGenerators(); ++r) {
        os << "  |";
        for (std::size_t col = 0; col < m.numRelations(); ++col) {
          std::string cell = "0";
          for (const auto& e : m.relations())
            if (e.row == r && e.col == col)
              cell = e.poly.toString(space);
          os << " " << cell;
        }
        os << " |\n";
      }
    }
  }
  for (auto it = c.differentials().rbegin(); it != c.differentials().rend(); ++it) {
    const auto& [d, f] = *it;
    os << "differential " << d << " -> " << d + 1 << ":\n";
    for (std::size_t r = 0; r < f.rows(); ++r) {
      os << "  |";
      for (std::size_t col = 0; col < f.cols(); ++col) {
        const SPolynomial* p = f.find(r, col);
        os << " " << (p ? p->toString(space) : "0");
      }
      os << " |\n";
    }
  }
  return os.str();
}

} // namespace tate
