#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mirabolic/errors.hpp"
#include "mirabolic/gaussian.hpp"
#include "mirabolic/rational.hpp"

namespace mirabolic {

/// Dense matrix over an exact field K.  K must be constructible from int,
/// support +, -, *, / and ==.  Used with Rational and GaussianRational.
template <typename K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}

  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, K(0)) {
    if (rows < 0 || cols < 0) throw domain_error("matrix dimensions must be non-negative");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const K& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool is_zero() const {
    for (const K& v : data_)
      if (!(v == K(0))) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  K trace() const {
    if (!is_square()) throw domain_error("trace of a non-square matrix");
    K sum(0);
    for (int i = 0; i < rows_; ++i) sum = sum + (*this)(i, i);
    return sum;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }

  friend Matrix operator*(const K& scalar, const Matrix& m) {
    Matrix out(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.data_.size(); ++i) out.data_[i] = scalar * m.data_[i];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw domain_error("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
      for (int k = 0; k < a.cols_; ++k) {
        const K& v = a(r, k);
        if (v == K(0)) continue;
        for (int c = 0; c < b.cols_; ++c) out(r, c) = out(r, c) + v * b(k, c);
      }
    return out;
  }

  /// Non-negative integer power of a square matrix; pow(0) is the identity.
  Matrix pow(int exponent) const {
    if (!is_square()) throw domain_error("power of a non-square matrix");
    if (exponent < 0) throw domain_error("negative matrix power");
    Matrix result = identity(rows_);
    for (int i = 0; i < exponent; ++i) result = result * (*this);
    return result;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<K> data_;
};

/// Reduced row echelon form with zero rows removed.  The result is the
/// canonical basis of the row space: leading entries are 1, pivot columns
/// are cleared, pivots move strictly right.
template <typename K>
Matrix<K> rref(const Matrix<K>& input) {
  Matrix<K> m = input;
  int pivot_row = 0;
  for (int col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    int found = -1;
    for (int r = pivot_row; r < m.rows(); ++r)
      if (!(m(r, col) == K(0))) {
        found = r;
        break;
      }
    if (found < 0) continue;
    if (found != pivot_row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(found, c), m(pivot_row, c));
    K lead = m(pivot_row, col);
    for (int c = 0; c < m.cols(); ++c) m(pivot_row, c) = m(pivot_row, c) / lead;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == pivot_row) continue;
      K factor = m(r, col);
      if (factor == K(0)) continue;
      for (int c = 0; c < m.cols(); ++c) m(r, c) = m(r, c) - factor * m(pivot_row, c);
    }
    ++pivot_row;
  }
  Matrix<K> out(pivot_row, m.cols());
  for (int r = 0; r < pivot_row; ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

template <typename K>
int rank(const Matrix<K>& m) {
  return rref(m).rows();
}

/// Inverse of a square matrix via Gauss-Jordan elimination.
template <typename K>
Matrix<K> inverse(const Matrix<K>& input) {
  if (!input.is_square()) throw domain_error("inverse of a non-square matrix");
  const int n = input.rows();
  Matrix<K> work(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) work(r, c) = input(r, c);
    work(r, n + r) = K(1);
  }
  Matrix<K> reduced = rref(work);
  if (reduced.rows() < n) throw domain_error("matrix is singular");
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!(reduced(r, c) == K(r == c ? 1 : 0))) throw domain_error("matrix is singular");
  Matrix<K> out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out(r, c) = reduced(r, n + c);
  return out;
}

using ExactMatrix = Matrix<GaussianRational>;

/// Plain text form: one row per line, entries as complex literals separated
/// by single spaces.
inline std::string matrix_to_text(const ExactMatrix& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += gaussian_to_string(m(r, c));
    }
    out += '\n';
  }
  return out;
}

/// Parses the plain text form.  Rows must all have the same width; blank
/// lines are ignored.  An empty input yields the 0 x 0 matrix.
inline ExactMatrix parse_matrix_text(std::string_view text) {
  std::vector<std::vector<GaussianRational>> rows;
  std::size_t line_start = 0;
  std::size_t pos = 0;
  auto flush_line = [&](std::size_t end) {
    std::vector<GaussianRational> row;
    std::size_t p = line_start;
    while (p < end) {
      if (text[p] == ' ' || text[p] == '\t' || text[p] == '\r') {
        ++p;
        continue;
      }
      std::size_t token_end = p;
      while (token_end < end && text[token_end] != ' ' && text[token_end] != '\t' &&
             text[token_end] != '\r')
        ++token_end;
      std::size_t cursor = p;
      GaussianRational value = detail::parse_gaussian_at(text, cursor);
      if (cursor != token_end) throw parse_error("malformed matrix entry", cursor);
      row.push_back(value);
      p = token_end;
    }
    if (!row.empty()) rows.push_back(std::move(row));
  };
  while (pos < text.size()) {
    if (text[pos] == '\n') {
      flush_line(pos);
      line_start = pos + 1;
    }
    ++pos;
  }
  flush_line(text.size());

  if (rows.empty()) return ExactMatrix(0, 0);
  const std::size_t width = rows.front().size();
  for (const auto& row : rows)
    if (row.size() != width) throw parse_error("ragged matrix rows", 0);
  ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(width));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace mirabolic
