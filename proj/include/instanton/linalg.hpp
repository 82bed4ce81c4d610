#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "instanton/rational.hpp"

namespace instanton {

/// Dense rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QMatrix transposed() const;
  std::vector<Rat> apply(const std::vector<Rat>& vec) const;
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct RrefResult {
  std::size_t rank = 0;
  QMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  /// One vector per free column f: 1 at f, zero at the other free columns.
  std::vector<std::vector<Rat>> kernel_basis;
};

/// Gauss-Jordan elimination. Pivot rule: first column with a nonzero entry
/// among the unreduced rows, pivot on the smallest such row index.
RrefResult rref_rank_kernel(const QMatrix& m);

/// Sparse vector: strictly increasing indices, no zero values.
using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

SparseVec make_sparse(std::vector<std::pair<std::size_t, Rat>> entries);
/// a + factor * b
SparseVec axpy(const SparseVec& a, const Rat& factor, const SparseVec& b);

/// Incrementally grown subspace in echelon form: every stored vector has a
/// distinct leading (largest) index. If indices are ordered so that they refine
/// a filtration, the stored vectors with leading index in the first k
/// filtration steps span the intersection of the subspace with those steps.
/// One instance must not be used from several threads at once.
class EchelonSpan {
 public:
  /// Reduces `v` by the stored vectors until its leading index is not a pivot.
  /// Zero result means `v` lies in the span.
  SparseVec reduce(SparseVec v) const;
  /// Returns true if `v` was independent and has been added.
  bool insert(SparseVec v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t dimension() const noexcept { return rows_.size(); }

 private:
  std::vector<SparseVec> rows_;  // pivot entry normalized to 1
  std::unordered_map<std::size_t, std::size_t> pivot_row_;
  mutable std::vector<Rat> work_;
};

/// Adds columns of a matrix one at a time and reports linear dependencies.
/// The dependency returned for column f expresses f through earlier
/// independent columns only, so the collection of dependencies equals the
/// kernel basis produced by rref_rank_kernel on the same column order.
class ColumnEliminator {
 public:
  /// `col` is the column's entries (row index -> value). Returns the kernel
  /// vector (column index -> coefficient, including 1 at this column) when
  /// the column depends on the earlier ones.
  std::optional<SparseVec> add_column(SparseVec col);
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t columns() const noexcept { return next_column_; }

 private:
  struct Row {
    SparseVec vec;
    SparseVec combo;  // this reduced vector as a combination of original columns
  };
  std::vector<Row> rows_;
  std::unordered_map<std::size_t, std::size_t> pivot_row_;
  std::size_t next_column_ = 0;
  std::vector<Rat> work_;
  std::vector<Rat> combo_;
};

}  // namespace instanton
