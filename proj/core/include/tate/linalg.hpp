#pragma once

/**
 * @file linalg.hpp
 * @brief Exact rank, kernel and cokernel computations over GF(p).
 *
 * Everything above this layer reduces to three questions about a sparse
 * matrix: its rank, a basis of its right kernel, and an explicit basis of
 * its cokernel together with the projection onto it.  All three are answered
 * by sparse Gaussian elimination with a deterministic pivot order, so
 * repeated runs produce identical bases.
 */

#include <cstddef>
#include <vector>

#include "tate/field.hpp"
#include "tate/sparse_matrix.hpp"

namespace tate {

/**
 * Incremental row-echelon basis of a subspace of GF(p)^dim.
 *
 * Stored rows are normalized so that their leading entry (with respect to
 * the column order) is 1.  `order` lists the columns from first to last; an
 * empty order means the natural one.
 */
class EchelonBasis {
public:
  EchelonBasis(const PrimeField& field, std::size_t dim,
               std::vector<Index> order = {});

  /// Adds v to the spanning set.  Returns true if it was independent.
  bool insert(const SparseVector& v);

  /// Reduces v modulo the span; the result has no entry on a pivot column.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// Brings the stored rows to reduced echelon form.
  void backSubstitute();

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  bool isPivot(Index col) const { return pivotRow_[col] >= 0; }
  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  const PrimeField& field() const { return field_; }

private:
  /// Reduces the scattered vector in place.  With stopAtFree the scan ends at
  /// the first surviving non-pivot column, which is returned (or dim_).
  Index eliminate(std::vector<Coeff>& acc, std::vector<Index>& support,
                  bool stopAtFree) const;

  PrimeField field_;
  std::size_t dim_;
  std::vector<Index> order_;    // position -> column
  std::vector<Index> position_; // column -> position
  std::vector<SparseVector> rows_;
  std::vector<Index> pivots_;   // pivot column of rows_[k]
  std::vector<int> pivotRow_;   // column -> row or -1
};

std::size_t rank(const SparseMatrix& m, const PrimeField& field);

/// Columns of the result form a basis of {x : m x = 0}, ordered by the free
/// column they are normalized on.
SparseMatrix kernelBasis(const SparseMatrix& m, const PrimeField& field);

/**
 * Explicit presentation of coker(m) = GF(p)^rows / colspace(m).
 *
 * The basis of the cokernel is the set of standard vectors on the non-pivot
 * rows (`freeRows`), in increasing order.
 */
class CokernelProjection {
public:
  CokernelProjection(const SparseMatrix& m, const PrimeField& field);

  std::size_t ambientDim() const { return image_.dim(); }
  std::size_t dim() const { return freeRows_.size(); }
  std::size_t imageRank() const { return image_.rank(); }
  const std::vector<Index>& freeRows() const { return freeRows_; }
  const std::vector<Index>& pivotRows() const { return image_.pivots(); }

  /// Coordinates of the class of v in the cokernel basis.
  SparseVector project(const SparseVector& v) const;

private:
  EchelonBasis image_;
  std::vector<Index> freeRows_;
  std::vector<int> freePosition_; // ambient row -> cokernel coordinate or -1
};

inline CokernelProjection imageCokernelBasis(const SparseMatrix& m,
                                             const PrimeField& field) {
  return CokernelProjection(m, field);
}

} // namespace tate
