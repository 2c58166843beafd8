#include "tate/free_complex.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tate {

std::size_t ExteriorMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_)
    n += c.size();
  return n;
}

void ExteriorMatrix::set(std::size_t row, std::size_t col, ExteriorElement value) {
  if (row >= rows_ || col >= columns_.size())
    throw std::out_of_range("exterior matrix entry out of range");
  auto& c = columns_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const Entry& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == row) {
    if (value.isZero())
      c.erase(it);
    else
      it->second = std::move(value);
  } else if (!value.isZero()) {
    c.insert(it, {row, std::move(value)});
  }
}

const ExteriorElement* ExteriorMatrix::find(std::size_t row, std::size_t col) const {
  const auto& c = columns_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const Entry& e, std::size_t r) { return e.first < r; });
  return (it != c.end() && it->first == row) ? &it->second : nullptr;
}

ExteriorMatrix compose(const ExteriorMatrix& psi, const ExteriorMatrix& phi,
                       const PrimeField& field) {
  if (psi.cols() != phi.rows())
    throw std::invalid_argument("composing exterior matrices of incompatible shapes");
  ExteriorMatrix out(psi.rows(), phi.cols());
  for (std::size_t s = 0; s < phi.cols(); ++s) {
    std::map<std::size_t, ExteriorElement> acc;
    for (const auto& [t, f] : phi.column(s))
      for (const auto& [u, g] : psi.column(t)) {
        ExteriorElement prod = extMultiply(g, f, field);
        auto [it, inserted] = acc.try_emplace(u, prod.degree());
        it->second.addScaled(prod, 1, field);
      }
    for (auto& [u, e] : acc)
      out.set(u, s, std::move(e));
  }
  return out;
}

DegreeLayout degreeLayout(const ProductSpace& space, const std::vector<FreeSummand>& summands,
                          const Multidegree& delta) {
  DegreeLayout l;
  l.offset.assign(summands.size(), DegreeLayout::kInactive);
  for (std::size_t s = 0; s < summands.size(); ++s) {
    std::size_t n = space.exteriorBasis(delta - summands[s].label).size();
    if (n == 0)
      continue;
    l.offset[s] = l.dim;
    l.active.push_back(s);
    l.dim += n;
  }
  return l;
}

SparseMatrix degreewiseMatrix(const ProductSpace& space, const ExteriorMatrix& phi,
                              const std::vector<FreeSummand>& source,
                              const DegreeLayout& sourceLayout,
                              const std::vector<FreeSummand>& target,
                              const DegreeLayout& targetLayout, const Multidegree& delta) {
  (void)target;
  const auto& F = space.field();
  SparseMatrix m(targetLayout.dim, sourceLayout.dim);
  for (std::size_t s : sourceLayout.active) {
    const auto& basis = space.exteriorBasis(delta - source[s].label);
    const auto& col = phi.column(s);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      ExtMask mk = basis[k];
      SparseVector v;
      for (const auto& [t, e] : col) {
        std::size_t off = targetLayout.offset[t];
        if (off == DegreeLayout::kInactive)
          continue;
        for (const auto& [g, c] : e.terms()) {
          if (g & mk)
            continue;
          Coeff val = wedgeSign(g, mk) < 0 ? F.neg(c) : c;
          v.push_back({static_cast<Index>(off + space.exteriorIndex(g | mk)), val});
        }
      }
      canonicalize(v, F);
      m.setColumn(sourceLayout.offset[s] + k, std::move(v));
    }
  }
  return m;
}

namespace {
const std::vector<FreeSummand> kEmptyTerm;
}

const std::vector<FreeSummand>& LabeledFreeComplex::term(int d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? kEmptyTerm : it->second;
}

void LabeledFreeComplex::setTerm(int d, std::vector<FreeSummand> summands) {
  for (const auto& s : summands)
    if (s.label.size() != space_.factors())
      throw std::invalid_argument("summand label has wrong length");
  if (summands.empty())
    terms_.erase(d);
  else
    terms_[d] = std::move(summands);
}

ExteriorMatrix LabeledFreeComplex::differential(int d) const {
  auto it = differentials_.find(d);
  if (it != differentials_.end())
    return it->second;
  return ExteriorMatrix(rank(d + 1), rank(d));
}

void LabeledFreeComplex::setDifferential(int d, ExteriorMatrix m) {
  if (m.rows() != rank(d + 1) || m.cols() != rank(d))
    throw std::invalid_argument("differential shape does not match its terms");
  const auto& src = term(d);
  const auto& tgt = term(d + 1);
  for (std::size_t s = 0; s < m.cols(); ++s)
    for (const auto& [t, e] : m.column(s))
      if (!(e.degree() == src[s].label - tgt[t].label))
        throw std::invalid_argument("differential entry at index " + std::to_string(d) +
                                    " has degree " + e.degree().toString() + ", labels force " +
                                    (src[s].label - tgt[t].label).toString());
  if (m.nonzeros() == 0)
    differentials_.erase(d);
  else
    differentials_[d] = std::move(m);
}

bool LabeledFreeComplex::isZero() const { return terms_.empty(); }

std::optional<std::pair<int, int>> LabeledFreeComplex::indexRange() const {
  if (terms_.empty())
    return std::nullopt;
  return std::make_pair(terms_.begin()->first, terms_.rbegin()->first);
}

std::size_t LabeledFreeComplex::dimAt(int d, const Multidegree& delta) const {
  return degreeLayout(space_, term(d), delta).dim;
}

SparseMatrix LabeledFreeComplex::matrixAt(int d, const Multidegree& delta) const {
  auto src = degreeLayout(space_, term(d), delta);
  auto tgt = degreeLayout(space_, term(d + 1), delta);
  auto it = differentials_.find(d);
  if (it == differentials_.end())
    return SparseMatrix(tgt.dim, src.dim);
  return degreewiseMatrix(space_, it->second, term(d), src, term(d + 1), tgt, delta);
}

LabeledFreeComplex
LabeledFreeComplex::restrictTo(const std::map<int, std::vector<std::size_t>>& kept) const {
  LabeledFreeComplex out(space_);
  out.orientation_ = orientation_;
  out.coverage_ = coverage_;
  std::map<int, std::vector<long>> newIndex;
  for (const auto& [d, idx] : kept) {
    const auto& old = term(d);
    std::vector<FreeSummand> summands;
    auto& map = newIndex[d];
    map.assign(old.size(), -1);
    for (std::size_t s : idx) {
      map[s] = static_cast<long>(summands.size());
      summands.push_back(old[s]);
    }
    out.setTerm(d, std::move(summands));
  }
  for (const auto& [d, m] : differentials_) {
    auto src = newIndex.find(d);
    auto tgt = newIndex.find(d + 1);
    if (src == newIndex.end() || tgt == newIndex.end())
      continue;
    ExteriorMatrix r(out.rank(d + 1), out.rank(d));
    for (std::size_t s = 0; s < m.cols(); ++s) {
      long ns = src->second[s];
      if (ns < 0)
        continue;
      for (const auto& [t, e] : m.column(s)) {
        long nt = tgt->second[t];
        if (nt >= 0)
          r.set(static_cast<std::size_t>(nt), static_cast<std::size_t>(ns), e);
      }
    }
    out.setDifferential(d, std::move(r));
  }
  return out;
}

std::vector<int> squareZeroFailuresSymbolic(const LabeledFreeComplex& c) {
  std::vector<int> bad;
  for (const auto& [d, m] : c.differentials()) {
    auto next = c.differentials().find(d + 1);
    if (next == c.differentials().end())
      continue;
    if (compose(next->second, m, c.space().field()).nonzeros() != 0)
      bad.push_back(d);
  }
  return bad;
}

std::vector<std::pair<int, Multidegree>>
squareZeroFailuresDegreewise(const LabeledFreeComplex& c, const std::vector<Multidegree>& degrees) {
  std::vector<std::pair<int, Multidegree>> bad;
  const auto& F = c.space().field();
  for (const auto& [d, m] : c.differentials()) {
    if (c.differentials().find(d + 1) == c.differentials().end())
      continue;
    for (const auto& delta : degrees) {
      SparseMatrix a = c.matrixAt(d, delta);
      if (a.rows() == 0 || a.cols() == 0)
        continue;
      if (!multiply(c.matrixAt(d + 1, delta), a, F).isZero())
        bad.push_back({d, delta});
    }
  }
  return bad;
}

bool hasUnitEntries(const LabeledFreeComplex& c) {
  for (const auto& [d, m] : c.differentials())
    for (std::size_t s = 0; s < m.cols(); ++s)
      for (const auto& [t, e] : m.column(s))
        if (e.constantTerm() != 0)
          return true;
  return false;
}

std::size_t BettiTable::total(int d) const {
  std::size_t n = 0;
  for (const auto& [key, count] : entries)
    if (key.first == d)
      n += count;
  return n;
}

std::vector<std::size_t> BettiTable::totals(int lo, int hi) const {
  std::vector<std::size_t> out;
  for (int d = lo; d <= hi; ++d)
    out.push_back(total(d));
  return out;
}

std::vector<int> BettiTable::indices() const {
  std::set<int> s;
  for (const auto& [key, count] : entries)
    s.insert(key.first);
  return {s.begin(), s.end()};
}

std::vector<int> BettiTable::rows() const {
  std::set<int> s;
  for (const auto& [key, count] : entries)
    s.insert(key.second);
  return {s.begin(), s.end()};
}

BettiTable betti(const LabeledFreeComplex& c) {
  BettiTable b;
  for (const auto& [d, summands] : c.terms())
    for (const auto& s : summands) {
      ++b.entries[{d, d - s.label.total()}];
      ++b.perLabel[{d, s.label}];
    }
  return b;
}

std::string renderBetti(const BettiTable& b) {
  auto idx = b.indices();
  auto rows = b.rows();
  if (idx.empty())
    return "index:\ntotal:\n";
  int lo = idx.front(), hi = idx.back();
  std::size_t width = 2;
  for (int d = lo; d <= hi; ++d) {
    width = std::max(width, std::to_string(d).size() + 1);
    width = std::max(width, std::to_string(b.total(d)).size() + 1);
  }
  std::ostringstream os;
  os << "index:";
  for (int d = lo; d <= hi; ++d)
    os << std::setw(static_cast<int>(width)) << d;
  os << "\ntotal:";
  for (int d = lo; d <= hi; ++d)
    os << std::setw(static_cast<int>(width)) << b.total(d);
  os << "\n";
  for (int r : rows) {
    os << std::setw(5) << r << ":";
    for (int d = lo; d <= hi; ++d) {
      auto it = b.entries.find({d, r});
      if (it == b.entries.end())
        os << std::setw(static_cast<int>(width)) << ".";
      else
        os << std::setw(static_cast<int>(width)) << it->second;
    }
    os << "\n";
  }
  return os.str();
}

std::vector<HomologyEntry> degreewiseHomology(const LabeledFreeComplex& c,
                                              const std::vector<Multidegree>& degrees,
                                              std::vector<int> indices) {
  if (indices.empty())
    for (const auto& [d, s] : c.terms())
      indices.push_back(d);
  const auto& F = c.space().field();
  std::vector<HomologyEntry> out;
  for (int d : indices)
    for (const auto& delta : degrees) {
      std::size_t dim = c.dimAt(d, delta);
      if (dim == 0)
        continue;
      std::size_t out_rank = rank(c.matrixAt(d, delta), F);
      std::size_t in_rank = rank(c.matrixAt(d - 1, delta), F);
      std::size_t h = dim - out_rank - in_rank;
      if (h != 0)
        out.push_back({d, delta, h});
    }
  return out;
}

} // namespace tate
