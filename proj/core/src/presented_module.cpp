#include "tate/presented_module.hpp"

#include <stdexcept>

namespace tate {

GradedPiece::GradedPiece(const ProductSpace& space, const Multidegree& d,
                         const std::vector<Multidegree>& genDegrees,
                         const SparseMatrix& relationImage)
    : degree_(d), space_(space), genDegrees_(genDegrees),
      cokernel_(relationImage, space.field()) {
  std::size_t off = 0;
  for (const auto& g : genDegrees) {
    offsets_.push_back(off);
    off += dimSPiece(space, d - g);
  }
  offsets_.push_back(off);
  // Lifts of the basis: the free rows, decoded back to (generator, monomial).
  std::size_t k = 0;
  std::vector<Exponents> monos;
  std::size_t monosOf = static_cast<std::size_t>(-1);
  for (Index r : cokernel_.freeRows()) {
    while (r >= offsets_[k + 1])
      ++k;
    if (monosOf != k) {
      monos = monomialBasis(space, d - genDegrees[k]);
      monosOf = k;
    }
    lifts_.push_back({k, monos[r - offsets_[k]]});
  }
}

std::int64_t GradedPiece::ambientIndex(std::size_t k, const Exponents& exps) const {
  if (!(space_.polynomialDegree(exps) == degree_ - genDegrees_[k]))
    return -1;
  return static_cast<std::int64_t>(offsets_[k] + monomialIndex(space_, exps));
}

PresentedModule::PresentedModule(ProductSpace space, std::vector<Multidegree> genDegrees,
                                 std::vector<Multidegree> colDegrees,
                                 std::vector<RelationEntry> relations)
    : space_(std::move(space)), genDegrees_(std::move(genDegrees)),
      colDegrees_(std::move(colDegrees)), relations_(std::move(relations)),
      columnEntries_(colDegrees_.size()), cache_(std::make_shared<Cache>()) {
  const std::size_t t = space_.factors();
  for (const auto& g : genDegrees_)
    if (g.size() != t)
      throw std::invalid_argument("generator degree has wrong length");
  for (const auto& c : colDegrees_)
    if (c.size() != t)
      throw std::invalid_argument("relation degree has wrong length");
  for (std::size_t e = 0; e < relations_.size(); ++e) {
    const auto& r = relations_[e];
    if (r.row >= genDegrees_.size() || r.col >= colDegrees_.size())
      throw std::invalid_argument("relation entry index out of range");
    if (r.poly.isZero())
      continue;
    Multidegree want = colDegrees_[r.col] - genDegrees_[r.row];
    if (!(r.poly.degree() == want))
      throw std::invalid_argument("relation entry (" + std::to_string(r.row) + "," +
                                  std::to_string(r.col) + ") has degree " +
                                  r.poly.degree().toString() + ", expected " +
                                  want.toString());
    columnEntries_[r.col].push_back(e);
  }
}

PresentedModule PresentedModule::free(const ProductSpace& space,
                                      std::vector<Multidegree> degrees) {
  return PresentedModule(space, std::move(degrees), {}, {});
}

SparseMatrix PresentedModule::relationImage(const Multidegree& d) const {
  std::vector<std::size_t> offsets;
  std::size_t ambient = 0;
  for (const auto& g : genDegrees_) {
    offsets.push_back(ambient);
    ambient += dimSPiece(space_, d - g);
  }
  const auto& F = space_.field();
  SparseMatrix img(ambient, 0);
  for (std::size_t j = 0; j < colDegrees_.size(); ++j) {
    Multidegree shift = d - colDegrees_[j];
    for (const auto& mu : monomialBasis(space_, shift)) {
      SparseVector v;
      for (std::size_t e : columnEntries_[j]) {
        const auto& r = relations_[e];
        for (const auto& [exps, c] : r.poly.terms()) {
          Exponents prod = exps;
          for (std::size_t k = 0; k < prod.size(); ++k)
            prod[k] += mu[k];
          v.push_back({static_cast<Index>(offsets[r.row] + monomialIndex(space_, prod)), c});
        }
      }
      canonicalize(v, F);
      img.appendColumn(std::move(v));
    }
  }
  return img;
}

std::shared_ptr<const GradedPiece> PresentedModule::gradedPiece(const Multidegree& d) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->pieces.find(d);
    if (it != cache_->pieces.end())
      return it->second;
  }
  auto piece = std::make_shared<const GradedPiece>(space_, d, genDegrees_, relationImage(d));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->pieces.emplace(d, std::move(piece));
  return it->second;
}

SparseMatrix PresentedModule::variableAction(const Multidegree& d, std::size_t var) const {
  auto src = gradedPiece(d);
  auto tgt = gradedPiece(d + space_.unit(space_.groupOf(var)));
  SparseMatrix m(tgt->dim(), src->dim());
  for (std::size_t j = 0; j < src->dim(); ++j) {
    const auto& lift = src->basisLift(j);
    Exponents e = lift.exps;
    ++e[var];
    auto idx = tgt->ambientIndex(lift.generator, e);
    m.setColumn(j, tgt->project({{static_cast<Index>(idx), 1}}));
  }
  return m;
}

SparseMatrix PresentedModule::multiplicationMap(const Multidegree& d, std::size_t i) const {
  SparseMatrix out(dim(d + space_.unit(i)), 0);
  for (std::size_t j = 0; j < space_.groupSize(i); ++j)
    out = hconcat(out, variableAction(d, space_.variable(i, j)));
  return out;
}

bool operator==(const PresentedModule& a, const PresentedModule& b) {
  if (!(a.space_ == b.space_) || a.genDegrees_ != b.genDegrees_ ||
      a.colDegrees_ != b.colDegrees_ || a.relations_.size() != b.relations_.size())
    return false;
  for (std::size_t e = 0; e < a.relations_.size(); ++e) {
    const auto& x = a.relations_[e];
    const auto& y = b.relations_[e];
    if (x.row != y.row || x.col != y.col || !(x.poly == y.poly))
      return false;
  }
  return true;
}

PresentedModule twist(const PresentedModule& m, const Multidegree& a) {
  std::vector<Multidegree> gens, cols;
  for (const auto& g : m.generatorDegrees())
    gens.push_back(g - a);
  for (const auto& c : m.relationDegrees())
    cols.push_back(c - a);
  return PresentedModule(m.space(), std::move(gens), std::move(cols), m.relations());
}

PresentedModule directSum(const PresentedModule& a, const PresentedModule& b) {
  if (!(a.space() == b.space()))
    throw std::invalid_argument("direct sum of modules over different rings");
  auto gens = a.generatorDegrees();
  gens.insert(gens.end(), b.generatorDegrees().begin(), b.generatorDegrees().end());
  auto cols = a.relationDegrees();
  cols.insert(cols.end(), b.relationDegrees().begin(), b.relationDegrees().end());
  auto rels = a.relations();
  for (auto r : b.relations()) {
    r.row += a.numGenerators();
    r.col += a.numRelations();
    rels.push_back(std::move(r));
  }
  return PresentedModule(a.space(), std::move(gens), std::move(cols), std::move(rels));
}

PresentedModule residueFieldModule(const ProductSpace& space) {
  std::vector<Multidegree> cols;
  std::vector<RelationEntry> rels;
  for (std::size_t v = 0; v < space.numVariables(); ++v) {
    cols.push_back(space.unit(space.groupOf(v)));
    rels.push_back({0, v, SPolynomial::variable(space, v)});
  }
  return PresentedModule(space, {space.zero()}, std::move(cols), std::move(rels));
}

PresentedModule koszulKernelModule(const ProductSpace& space) {
  const std::size_t n = space.numVariables();
  const auto& F = space.field();
  auto deg = [&](std::size_t v) { return space.unit(space.groupOf(v)); };
  std::vector<Multidegree> gens;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pairIndex;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      pairIndex[{u, v}] = gens.size();
      gens.push_back(deg(u) + deg(v));
    }
  std::vector<Multidegree> cols;
  std::vector<RelationEntry> rels;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      for (std::size_t w = v + 1; w < n; ++w) {
        std::size_t col = cols.size();
        cols.push_back(deg(u) + deg(v) + deg(w));
        // d(e_u e_v e_w) = x_u e_vw - x_v e_uw + x_w e_uv
        rels.push_back({pairIndex[{v, w}], col, SPolynomial::variable(space, u)});
        rels.push_back({pairIndex[{u, w}], col, SPolynomial::variable(space, v, F.neg(1))});
        rels.push_back({pairIndex[{u, v}], col, SPolynomial::variable(space, w)});
      }
  return PresentedModule(space, std::move(gens), std::move(cols), std::move(rels));
}

std::map<Multidegree, std::uint64_t, LexLess>
hilbertFunctionBox(const PresentedModule& m, const Multidegree& low, const Multidegree& high) {
  if (!leq(low, high))
    throw std::invalid_argument("hilbertFunctionBox needs low <= high");
  std::map<Multidegree, std::uint64_t, LexLess> out;
  for (const auto& d : degreeBox(low, high))
    out[d] = m.dim(d);
  return out;
}

} // namespace tate
