#include "tate/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace tate {

EchelonBasis::EchelonBasis(const PrimeField& field, std::size_t dim,
                           std::vector<Index> order)
    : field_(field), dim_(dim), order_(std::move(order)), position_(dim),
      pivotRow_(dim, -1) {
  if (order_.empty()) {
    order_.resize(dim);
    std::iota(order_.begin(), order_.end(), Index{0});
  }
  if (order_.size() != dim)
    throw std::invalid_argument("column order has wrong length");
  for (std::size_t p = 0; p < dim; ++p)
    position_[order_[p]] = static_cast<Index>(p);
}

Index EchelonBasis::eliminate(std::vector<Coeff>& acc, std::vector<Index>& support,
                              bool stopAtFree) const {
  // min-heap over positions in the column order
  std::priority_queue<Index, std::vector<Index>, std::greater<>> heap;
  std::vector<char> queued(dim_, 0);
  for (Index c : support) {
    heap.push(position_[c]);
    queued[c] = 1;
  }
  support.clear();
  while (!heap.empty()) {
    Index pos = heap.top();
    heap.pop();
    Index col = order_[pos];
    queued[col] = 0;
    Coeff a = acc[col];
    if (a == 0)
      continue;
    int r = pivotRow_[col];
    if (r < 0) {
      support.push_back(col);
      if (stopAtFree) {
        while (!heap.empty()) {
          Index rest = order_[heap.top()];
          heap.pop();
          if (acc[rest] != 0)
            support.push_back(rest);
        }
        return col;
      }
      continue;
    }
    for (const auto& e : rows_[r]) {
      bool wasZero = acc[e.index] == 0;
      acc[e.index] = field_.subMul(acc[e.index], a, e.value);
      if (wasZero && acc[e.index] != 0 && !queued[e.index] &&
          position_[e.index] > pos) {
        heap.push(position_[e.index]);
        queued[e.index] = 1;
      }
    }
  }
  return static_cast<Index>(dim_);
}

bool EchelonBasis::insert(const SparseVector& v) {
  if (v.empty())
    return false;
  std::vector<Coeff> acc(dim_, 0);
  std::vector<Index> support;
  for (const auto& e : v) {
    if (e.index >= dim_)
      throw std::out_of_range("vector entry outside echelon dimension");
    acc[e.index] = e.value;
    support.push_back(e.index);
  }
  Index lead = eliminate(acc, support, true);
  if (lead == dim_)
    return false;
  Coeff inv = field_.inverse(acc[lead]);
  SparseVector row;
  row.reserve(support.size());
  for (Index c : support)
    if (acc[c] != 0)
      row.push_back({c, field_.mul(acc[c], inv)});
  std::sort(row.begin(), row.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  pivotRow_[lead] = static_cast<int>(rows_.size());
  pivots_.push_back(lead);
  rows_.push_back(std::move(row));
  return true;
}

SparseVector EchelonBasis::reduce(const SparseVector& v) const {
  std::vector<Coeff> acc(dim_, 0);
  std::vector<Index> support;
  for (const auto& e : v) {
    acc[e.index] = e.value;
    support.push_back(e.index);
  }
  eliminate(acc, support, false);
  SparseVector out;
  for (Index c : support)
    if (acc[c] != 0)
      out.push_back({c, acc[c]});
  std::sort(out.begin(), out.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  return out;
}

void EchelonBasis::backSubstitute() {
  // Latest pivots first, so every row used for reduction is already reduced.
  std::vector<std::size_t> byPos(rows_.size());
  std::iota(byPos.begin(), byPos.end(), std::size_t{0});
  std::sort(byPos.begin(), byPos.end(), [&](std::size_t a, std::size_t b) {
    return position_[pivots_[a]] > position_[pivots_[b]];
  });
  std::vector<Coeff> acc(dim_, 0);
  for (std::size_t k : byPos) {
    Index lead = pivots_[k];
    bool needs = false;
    for (const auto& e : rows_[k])
      if (e.index != lead && pivotRow_[e.index] >= 0) {
        needs = true;
        break;
      }
    if (!needs)
      continue;
    std::vector<Index> support;
    for (const auto& e : rows_[k])
      if (e.index != lead) {
        acc[e.index] = e.value;
        support.push_back(e.index);
      }
    eliminate(acc, support, false);
    SparseVector row{{lead, 1}};
    for (Index c : support)
      if (acc[c] != 0)
        row.push_back({c, acc[c]});
    for (Index c : support)
      acc[c] = 0;
    std::sort(row.begin(), row.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    rows_[k] = std::move(row);
  }
}

namespace {

// Markowitz-style static ordering: sparse columns first, ties by index.
std::vector<Index> sparseColumnOrder(const SparseMatrix& m) {
  std::vector<Index> order(m.cols());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return m.column(a).size() < m.column(b).size();
  });
  return order;
}

EchelonBasis rowEchelon(const SparseMatrix& m, const PrimeField& field) {
  SparseMatrix t = m.transpose();
  std::vector<Index> rows(t.cols());
  std::iota(rows.begin(), rows.end(), Index{0});
  std::stable_sort(rows.begin(), rows.end(), [&](Index a, Index b) {
    return t.column(a).size() < t.column(b).size();
  });
  EchelonBasis basis(field, m.cols(), sparseColumnOrder(m));
  for (Index r : rows) {
    if (basis.rank() == m.cols())
      break;
    basis.insert(t.column(r));
  }
  return basis;
}

} // namespace

std::size_t rank(const SparseMatrix& m, const PrimeField& field) {
  if (m.rows() < m.cols())
    return rowEchelon(m.transpose(), field).rank();
  return rowEchelon(m, field).rank();
}

SparseMatrix kernelBasis(const SparseMatrix& m, const PrimeField& field) {
  EchelonBasis basis = rowEchelon(m, field);
  basis.backSubstitute();
  std::size_t n = m.cols();
  std::vector<int> slot(n, -1);
  std::vector<SparseVector> vectors;
  for (Index c = 0; c < n; ++c)
    if (!basis.isPivot(c)) {
      slot[c] = static_cast<int>(vectors.size());
      vectors.push_back({{c, 1}});
    }
  const auto& rows = basis.rows();
  const auto& piv = basis.pivots();
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (const auto& e : rows[k])
      if (slot[e.index] >= 0)
        vectors[slot[e.index]].push_back({piv[k], field.neg(e.value)});
  SparseMatrix out(n, 0);
  for (auto& v : vectors) {
    canonicalize(v, field);
    out.appendColumn(std::move(v));
  }
  return out;
}

CokernelProjection::CokernelProjection(const SparseMatrix& m, const PrimeField& field)
    : image_(field, m.rows()), freePosition_(m.rows(), -1) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (image_.rank() == m.rows())
      break;
    image_.insert(m.column(c));
  }
  image_.backSubstitute();
  for (Index r = 0; r < m.rows(); ++r)
    if (!image_.isPivot(r)) {
      freePosition_[r] = static_cast<int>(freeRows_.size());
      freeRows_.push_back(r);
    }
}

SparseVector CokernelProjection::project(const SparseVector& v) const {
  SparseVector reduced = image_.reduce(v);
  for (auto& e : reduced)
    e.index = static_cast<Index>(freePosition_[e.index]);
  return reduced;
}

} // namespace tate
