#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "pentagram/rational.hpp"

namespace pentagram {

using Vec = std::vector<Scalar>;

// Dense row-major matrix over a commutative ring T. T must be constructible
// from an int (0 and 1) and provide +, -, * and ==.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      assert(row.size() == cols_);
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }

  // Columns given as vectors (all the same length).
  static Matrix from_columns(const std::vector<std::vector<T>>& columns) {
    std::size_t r = columns.empty() ? 0 : columns.front().size();
    Matrix out(r, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      assert(columns[c].size() == r);
      for (std::size_t i = 0; i < r; ++i) out(i, c) = columns[c][i];
    }
    return out;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix out(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == c);
      for (std::size_t j = 0; j < c; ++j) out(i, j) = rows[i][j];
    }
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  T trace() const {
    T out(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) out += (*this)(i, i);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j) == T(0)) continue;
          out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    assert(a.cols_ == v.size());
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  Matrix scaled(const T& factor) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= factor;
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Scalar>;

}  // namespace pentagram
