#include "tate/sparse_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace tate {

void canonicalize(SparseVector& v, const PrimeField& field) {
  std::sort(v.begin(), v.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    Index idx = v[i].index;
    Coeff acc = 0;
    for (; i < v.size() && v[i].index == idx; ++i)
      acc = field.add(acc, v[i].value % field.characteristic());
    if (acc != 0)
      v[out++] = {idx, acc};
  }
  v.resize(out);
}

SparseVector axpy(const SparseVector& a, Coeff c, const SparseVector& b,
                  const PrimeField& field) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      Coeff v = field.mul(c, b[j].value);
      if (v != 0)
        out.push_back({b[j].index, v});
      ++j;
    } else {
      Coeff v = field.add(a[i].value, field.mul(c, b[j].value));
      if (v != 0)
        out.push_back({a[i].index, v});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), columns_(cols) {}

SparseMatrix SparseMatrix::fromTriplets(std::size_t rows, std::size_t cols,
                                        std::span<const Triplet> triplets,
                                        const PrimeField& field) {
  SparseMatrix m(rows, cols);
  for (const auto& t : triplets) {
    if (t.row >= rows || t.col >= cols)
      throw std::out_of_range("triplet index outside matrix bounds");
    m.columns_[t.col].push_back({t.row, t.value});
  }
  for (auto& c : m.columns_)
    canonicalize(c, field);
  return m;
}

SparseMatrix SparseMatrix::fromDense(const std::vector<std::vector<std::int64_t>>& rows,
                                     const PrimeField& field) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols)
      throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < ncols; ++c) {
      Coeff v = field.reduce(rows[r][c]);
      if (v != 0)
        m.columns_[c].push_back({static_cast<Index>(r), v});
    }
  }
  return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.columns_[i].push_back({static_cast<Index>(i), 1});
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_)
    n += c.size();
  return n;
}

void SparseMatrix::setColumn(std::size_t c, SparseVector v) {
  if (!v.empty() && v.back().index >= rows_)
    throw std::out_of_range("column entry outside matrix bounds");
  columns_.at(c) = std::move(v);
}

void SparseMatrix::appendColumn(SparseVector v) {
  if (!v.empty() && v.back().index >= rows_)
    throw std::out_of_range("column entry outside matrix bounds");
  columns_.push_back(std::move(v));
}

Coeff SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const SparseEntry& e, std::size_t i) { return e.index < i; });
  return (it != col.end() && it->index == r) ? it->value : 0;
}

std::vector<Triplet> SparseMatrix::entries() const {
  std::vector<Triplet> out;
  out.reserve(nonzeros());
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& e : columns_[c])
      out.push_back({e.index, static_cast<Index>(c), e.value});
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols(), rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& e : columns_[c])
      t.columns_[e.index].push_back({static_cast<Index>(c), e.value});
  return t;
}

SparseVector multiply(const SparseMatrix& a, const SparseVector& x,
                      const PrimeField& field) {
  SparseVector out;
  for (const auto& e : x)
    for (const auto& ae : a.column(e.index))
      out.push_back({ae.index, field.mul(ae.value, e.value)});
  canonicalize(out, field);
  return out;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b,
                      const PrimeField& field) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product dimension mismatch");
  SparseMatrix out(a.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c)
    out.setColumn(c, multiply(a, b.column(c), field));
  return out;
}

SparseMatrix hconcat(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("hconcat row mismatch");
  SparseMatrix out = a;
  for (std::size_t c = 0; c < b.cols(); ++c)
    out.appendColumn(b.column(c));
  return out;
}

std::ostream& operator<<(std::ostream& os, const SparseMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '|';
    for (std::size_t c = 0; c < m.cols(); ++c)
      os << ' ' << m.at(r, c);
    os << " |\n";
  }
  return os;
}

} // namespace tate
