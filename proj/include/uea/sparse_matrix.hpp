#ifndef UEA_SPARSE_MATRIX_HPP
#define UEA_SPARSE_MATRIX_HPP

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "uea/parallel.hpp"
#include "uea/scalar.hpp"

namespace uea {

using Vector = std::vector<Scalar>;

/// Exact sparse matrix over a single Field. Zero entries are never stored.
class SparseMatrix {
 public:
  using Entries = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

  SparseMatrix(Field field, std::size_t rows, std::size_t cols) : field_{field}, rows_{rows}, cols_{cols} {}

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  const Entries& entries() const noexcept { return entries_; }

  /// Throws FieldMismatch for a scalar from another field, MalformedInput
  /// for an out-of-range position. Setting zero erases the entry.
  void set(std::size_t row, std::size_t col, const Scalar& value);
  void add(std::size_t row, std::size_t col, const Scalar& value);
  Scalar get(std::size_t row, std::size_t col) const;

  /// Appends an empty row and returns its index.
  std::size_t append_row() { return rows_++; }

  Vector apply(std::span<const Scalar> v) const;

 private:
  void check_entry(std::size_t row, std::size_t col, const Scalar& value) const;

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  Entries entries_;
};

/// Reduced row echelon form: rows sorted by pivot column, each with leading 1.
struct RowEchelon {
  Field field;
  std::size_t cols = 0;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;

  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination. Pivots are chosen by smallest column, then
/// smallest row index. Over Q the elimination is fraction-free on
/// integer-scaled rows with content removal after every row operation.
RowEchelon reduced_echelon(const SparseMatrix& m, Exec exec = Exec::Parallel);

/// Basis of {v : m v = 0}, one vector per free column in ascending order.
/// Each vector has a 1 at its free column and zeros at the other free columns.
std::vector<Vector> kernel_basis(const SparseMatrix& m, Exec exec = Exec::Parallel);

std::size_t rank(const SparseMatrix& m, Exec exec = Exec::Parallel);

/// Rank of a list of dense vectors (all of length `dim`).
std::size_t span_rank(Field field, std::size_t dim, std::span<const Vector> vectors, Exec exec = Exec::Parallel);

/// True when `v` lies in the row space recorded by `echelon`.
bool in_row_space(const RowEchelon& echelon, std::span<const Scalar> v);

}  // namespace uea

#endif  // UEA_SPARSE_MATRIX_HPP
