#include "qsymp/matrix.hpp"

#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace qsymp {

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(PrimeField field, std::size_t cols,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionMismatch("row " + std::to_string(r) + " has " +
                              std::to_string(rows[r].size()) + " entries, expected " +
                              std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.reduce(rows[r][c]);
  }
  return m;
}

Matrix Matrix::identity(PrimeField field, std::size_t size) {
  Matrix m(field, size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

void Matrix::append_row(std::span<const Scalar> values) {
  if (values.size() != cols_) throw DimensionMismatch("appended row has wrong length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::vector<std::vector<std::int64_t>> Matrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

namespace detail {

Matrix rref_dense(const Matrix& m) {
  const PrimeField& f = m.field();
  Matrix a = m;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(pivot_row, c));
    }
    const Scalar scale = f.inv(a(pivot_row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) = f.mul(a(pivot_row, c), scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a(r, col) == 0) continue;
      const Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        a(r, c) = f.sub(a(r, c), f.mul(factor, a(pivot_row, c)));
      }
    }
    ++pivot_row;
  }
  Matrix out(f, 0, a.cols());
  for (std::size_t r = 0; r < pivot_row; ++r) out.append_row(a.row(r));
  return out;
}

Matrix rref_gf2_packed(const Matrix& m) {
  const std::size_t words = (m.cols() + 63) / 64;
  std::vector<std::uint64_t> bits(m.rows() * words, 0);
  auto row_bits = [&](std::size_t r) { return bits.data() + r * words; };
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) & 1U) row_bits(r)[c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t mask = std::uint64_t{1} << (col % 64);
    std::size_t sel = pivot_row;
    while (sel < m.rows() && !(row_bits(sel)[w] & mask)) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t k = 0; k < words; ++k) std::swap(row_bits(sel)[k], row_bits(pivot_row)[k]);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || !(row_bits(r)[w] & mask)) continue;
      for (std::size_t k = w; k < words; ++k) row_bits(r)[k] ^= row_bits(pivot_row)[k];
    }
    ++pivot_row;
  }
  Matrix out(m.field(), pivot_row, m.cols());
  for (std::size_t r = 0; r < pivot_row; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(r, c) = static_cast<Scalar>((row_bits(r)[c / 64] >> (c % 64)) & 1U);
    }
  }
  return out;
}

}  // namespace detail

Matrix rref(const Matrix& m) {
  if (m.field().order() == 2) return detail::rref_gf2_packed(m);
  return detail::rref_dense(m);
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

std::vector<std::size_t> pivot_columns(const Matrix& canonical) {
  std::vector<std::size_t> pivots;
  pivots.reserve(canonical.rows());
  for (std::size_t r = 0; r < canonical.rows(); ++r) {
    std::size_t c = 0;
    while (c < canonical.cols() && canonical(r, c) == 0) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

Matrix kernel(const Matrix& m) {
  const PrimeField& f = m.field();
  const Matrix reduced = rref(m);
  const auto pivots = pivot_columns(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  Matrix basis(f, 0, m.cols());
  std::vector<Scalar> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < reduced.rows(); ++r) v[pivots[r]] = f.neg(reduced(r, free));
    basis.append_row(v);
  }
  return rref(basis);
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || !(a.field() == b.field())) {
    throw DimensionMismatch("cannot stack matrices with " + std::to_string(a.cols()) + " and " +
                            std::to_string(b.cols()) + " columns");
  }
  Matrix out = a;
  for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

Matrix sum(const Matrix& a, const Matrix& b) { return rref(vstack(a, b)); }

Matrix intersect(const Matrix& a, const Matrix& b) {
  // A ∩ B = (ann A + ann B)^ann under the standard dot product.
  const Matrix both = vstack(kernel(a), kernel(b));
  if (both.rows() == 0) return rref(a);
  return kernel(both);
}

bool row_space_contains(const Matrix& canonical, std::span<const Scalar> v) {
  if (v.size() != canonical.cols()) throw DimensionMismatch("vector length differs from columns");
  const PrimeField& f = canonical.field();
  std::vector<Scalar> residual(v.begin(), v.end());
  const auto pivots = pivot_columns(canonical);
  for (std::size_t r = 0; r < canonical.rows(); ++r) {
    const Scalar factor = residual[pivots[r]];
    if (factor == 0) continue;
    for (std::size_t c = pivots[r]; c < canonical.cols(); ++c) {
      residual[c] = f.sub(residual[c], f.mul(factor, canonical(r, c)));
    }
  }
  for (auto x : residual) {
    if (x != 0) return false;
  }
  return true;
}

Matrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("missing matrix header \"q rows cols\"", line_no);
  std::istringstream header(line);
  std::int64_t q = 0;
  std::int64_t rows = -1;
  std::int64_t cols = -1;
  if (!(header >> q >> rows >> cols) || rows < 0 || cols < 0) {
    throw ParseError("malformed matrix header \"" + line + "\"", line_no);
  }
  std::optional<PrimeField> field;
  try {
    field.emplace(static_cast<Scalar>(q));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), line_no);
  }
  std::vector<std::vector<std::int64_t>> entries;
  for (std::int64_t r = 0; r < rows; ++r) {
    if (!next_line()) throw ParseError("expected " + std::to_string(rows) + " rows", line_no);
    std::istringstream ls(line);
    std::vector<std::int64_t> row;
    std::int64_t x = 0;
    while (ls >> x) row.push_back(x);
    if (!ls.eof()) throw ParseError("non-integer entry", line_no);
    if (row.size() != static_cast<std::size_t>(cols)) {
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(cols),
                       line_no);
    }
    entries.push_back(std::move(row));
  }
  return Matrix::from_rows(*field, static_cast<std::size_t>(cols), entries);
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.field().order() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
}

}  // namespace qsymp
