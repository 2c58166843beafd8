#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tate/field.hpp"

namespace tate {

using Index = std::uint32_t;

struct SparseEntry {
  Index index;
  Coeff value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sparse vector over GF(p): entries sorted by index, no stored zeros.
using SparseVector = std::vector<SparseEntry>;

/// Sorts, merges duplicates and drops zeros.
void canonicalize(SparseVector& v, const PrimeField& field);

/// a + c*b
SparseVector axpy(const SparseVector& a, Coeff c, const SparseVector& b,
                  const PrimeField& field);

struct Triplet {
  Index row;
  Index col;
  Coeff value;
  friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// Column-major sparse matrix over GF(p).
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  /// Builds from (row, col, value) triplets; duplicates are summed and
  /// values are reduced mod p.  Out-of-range indices throw.
  static SparseMatrix fromTriplets(std::size_t rows, std::size_t cols,
                                   std::span<const Triplet> triplets,
                                   const PrimeField& field);
  static SparseMatrix fromDense(const std::vector<std::vector<std::int64_t>>& rows,
                                const PrimeField& field);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const;

  const SparseVector& column(std::size_t c) const { return columns_[c]; }
  /// Replaces a column; the vector must already be canonical.
  void setColumn(std::size_t c, SparseVector v);
  void appendColumn(SparseVector v);

  Coeff at(std::size_t r, std::size_t c) const;
  std::vector<Triplet> entries() const;

  SparseMatrix transpose() const;
  bool isZero() const { return nonzeros() == 0; }

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b,
                      const PrimeField& field);
SparseVector multiply(const SparseMatrix& a, const SparseVector& x,
                      const PrimeField& field);

/// Horizontal concatenation [a | b]; row counts must agree.
SparseMatrix hconcat(const SparseMatrix& a, const SparseMatrix& b);

std::ostream& operator<<(std::ostream& os, const SparseMatrix& m);

} // namespace tate
