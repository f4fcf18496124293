#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "qsymp/field.hpp"

namespace qsymp {

/// Dense row-major matrix over a prime field. Rows double as a spanning set,
/// so most of the library treats a Matrix as "the row space it spans".
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);

  // Entries are reduced modulo q; every row must have `cols` entries.
  static Matrix from_rows(PrimeField field, std::size_t cols,
                          const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix identity(PrimeField field, std::size_t size);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  // Appends a row; entries must already be reduced.
  void append_row(std::span<const Scalar> values);
  Matrix transpose() const;
  std::vector<std::vector<std::int64_t>> to_rows() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

// Canonical reduced row echelon form: leading entries 1, pivots strictly increasing,
// zero rows dropped. Two matrices span the same row space iff their rref is equal.
// Dispatches to a word-packed path when q = 2.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Pivot column of each row of a matrix already in canonical form.
std::vector<std::size_t> pivot_columns(const Matrix& canonical);

// Canonical basis of { v : m v = 0 }.
Matrix kernel(const Matrix& m);

Matrix vstack(const Matrix& a, const Matrix& b);

// Row spaces of the sum and intersection, both canonical. Throw DimensionMismatch
// when the column counts or fields differ.
Matrix sum(const Matrix& a, const Matrix& b);
Matrix intersect(const Matrix& a, const Matrix& b);

// Membership of v in the row space of a canonical matrix.
bool row_space_contains(const Matrix& canonical, std::span<const Scalar> v);

// Text format: "q rows cols" followed by one line of space-separated integers per row.
Matrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Matrix& m);

namespace detail {
Matrix rref_dense(const Matrix& m);
Matrix rref_gf2_packed(const Matrix& m);
}  // namespace detail

}  // namespace qsymp
