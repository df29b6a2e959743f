#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "subq/errors.hpp"

namespace subq::rings {

/// Dense row-major matrix over `Ring`. An m x n matrix is the morphism
/// R^{1 x m} -> R^{1 x n} of the rows category; 0 x n and m x 0 matrices are
/// legal and represent the maps from/to the zero object.
template <class Ring>
class Matrix {
 public:
  using Element = typename Ring::Element;

  Matrix() = default;

  Matrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, ring_.zero()) {}

  Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Element> entries)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw DimensionError("matrix entry count " + std::to_string(entries_.size()) + " does not match " +
                           std::to_string(rows_) + "x" + std::to_string(cols_));
  }

  /// Builds a matrix from small integer literals; `rows` and `cols` are
  /// explicit so that empty shapes stay expressible.
  static Matrix from_ints(const Ring& ring, std::size_t rows, std::size_t cols,
                          std::initializer_list<long> values) {
    if (values.size() != rows * cols) throw DimensionError("from_ints: wrong number of values");
    std::vector<Element> e;
    e.reserve(values.size());
    for (long v : values) e.push_back(ring.from_int(v));
    return Matrix(ring, rows, cols, std::move(e));
  }

  static Matrix zero(const Ring& ring, std::size_t rows, std::size_t cols) { return Matrix(ring, rows, cols); }

  static Matrix identity(const Ring& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
  }

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  Element& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Element>& entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!ring_.is_zero(e)) return false;
    return true;
  }

  bool row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
      if (!ring_.is_zero((*this)(i, j))) return false;
    return true;
  }

  /// Rows [begin, end).
  Matrix row_block(std::size_t begin, std::size_t end) const {
    if (begin > end || end > rows_) throw DimensionError("row_block out of range");
    return Matrix(ring_, end - begin, cols_,
                  std::vector<Element>(entries_.begin() + std::ptrdiff_t(begin * cols_),
                                       entries_.begin() + std::ptrdiff_t(end * cols_)));
  }

  Matrix row(std::size_t i) const { return row_block(i, i + 1); }

  /// Columns [begin, end).
  Matrix col_block(std::size_t begin, std::size_t end) const {
    if (begin > end || end > cols_) throw DimensionError("col_block out of range");
    Matrix m(ring_, rows_, end - begin);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = begin; j < end; ++j) m(i, j - begin) = (*this)(i, j);
    return m;
  }

  /// Rows selected by index, in the given order.
  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(ring_, idx.size(), cols_);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t j = 0; j < cols_; ++j) m(r, j) = (*this)(idx[r], j);
    return m;
  }

  Matrix transpose() const {
    Matrix m(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (!(a.ring_ == b.ring_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
      if (!a.ring_.equal(a.entries_[k], b.entries_[k])) return false;
    return true;
  }

 private:
  Ring ring_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> entries_;
};

namespace detail {
template <class Ring>
void require_same_ring(const Matrix<Ring>& a, const Matrix<Ring>& b, const char* op) {
  if (!(a.ring() == b.ring()))
    throw BackendMismatch(std::string(op) + ": " + a.ring().name() + " vs " + b.ring().name());
}
}  // namespace detail

/// Exact product A*B (A is m x n, B is n x q).
template <class Ring>
Matrix<Ring> matmul(const Matrix<Ring>& a, const Matrix<Ring>& b) {
  detail::require_same_ring(a, b, "matmul");
  if (a.cols() != b.rows())
    throw DimensionError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  const auto& ring = a.ring();
  Matrix<Ring> c(ring, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (ring.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = ring.add(c(i, j), ring.mul(aik, b(k, j)));
    }
  return c;
}

template <class Ring>
Matrix<Ring> operator*(const Matrix<Ring>& a, const Matrix<Ring>& b) {
  return matmul(a, b);
}

template <class Ring>
Matrix<Ring> operator+(const Matrix<Ring>& a, const Matrix<Ring>& b) {
  detail::require_same_ring(a, b, "add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("add: shape mismatch");
  Matrix<Ring> c(a.ring(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.ring().add(a(i, j), b(i, j));
  return c;
}

template <class Ring>
Matrix<Ring> operator-(const Matrix<Ring>& a) {
  Matrix<Ring> c(a.ring(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.ring().neg(a(i, j));
  return c;
}

template <class Ring>
Matrix<Ring> operator-(const Matrix<Ring>& a, const Matrix<Ring>& b) {
  detail::require_same_ring(a, b, "sub");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("sub: shape mismatch");
  Matrix<Ring> c(a.ring(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.ring().sub(a(i, j), b(i, j));
  return c;
}

/// Multiplies every entry by `s` from the left.
template <class Ring>
Matrix<Ring> scale(const typename Ring::Element& s, const Matrix<Ring>& a) {
  Matrix<Ring> c(a.ring(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.ring().mul(s, a(i, j));
  return c;
}

/// Vertical stack [top; bottom] (the column-stack of two morphisms into the
/// same target).
template <class Ring>
Matrix<Ring> stack(const Matrix<Ring>& top, const Matrix<Ring>& bottom) {
  detail::require_same_ring(top, bottom, "stack");
  if (top.cols() != bottom.cols())
    throw DimensionError("stack: column counts " + std::to_string(top.cols()) + " and " +
                         std::to_string(bottom.cols()) + " differ");
  auto e = top.entries();
  e.insert(e.end(), bottom.entries().begin(), bottom.entries().end());
  return Matrix<Ring>(top.ring(), top.rows() + bottom.rows(), top.cols(), std::move(e));
}

/// Horizontal concatenation [left | right].
template <class Ring>
Matrix<Ring> augment(const Matrix<Ring>& left, const Matrix<Ring>& right) {
  detail::require_same_ring(left, right, "augment");
  if (left.rows() != right.rows()) throw DimensionError("augment: row counts differ");
  Matrix<Ring> c(left.ring(), left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) c(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) c(i, left.cols() + j) = right(i, j);
  }
  return c;
}

template <class Ring>
Matrix<Ring> block_diagonal(const Matrix<Ring>& a, const Matrix<Ring>& b) {
  detail::require_same_ring(a, b, "block_diagonal");
  Matrix<Ring> c(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

/// Literal syntax: `[[a,b],[c,d]]`, or `RxC:[]` whenever a dimension is 0.
template <class Ring>
std::string format(const Matrix<Ring>& m) {
  if (m.rows() == 0 || m.cols() == 0) return std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":[]";
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += m.ring().format(m(i, j));
    }
    out += "]";
  }
  out += "]";
  return out;
}

}  // namespace subq::rings
