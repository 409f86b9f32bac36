#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "jcf/rational.hpp"

namespace jcf {

/// Column vector of rationals.
using Vector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Row-wise literal, e.g. Mat{{0, 1}, {0, 0}}. Throws DimensionMismatch on ragged rows.
  Mat(std::initializer_list<std::initializer_list<Rational>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat diagonal(std::span<const Rational> diag);
  /// Stacks vectors as columns; every vector must have length `rows`.
  static Mat from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Rational>& entries() const { return data_; }

  Vector column(std::size_t c) const;
  std::vector<Vector> columns() const;
  Vector row(std::size_t r) const;
  /// Columns [first, first + count).
  Mat column_block(std::size_t first, std::size_t count) const;
  /// Rows [first, first + count).
  Mat row_block(std::size_t first, std::size_t count) const;
  Mat transpose() const;
  Rational trace() const;

  Mat& operator+=(const Mat& rhs);
  Mat& operator-=(const Mat& rhs);
  Mat& operator*=(const Rational& c);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Rational& c) { return a *= c; }
  friend Mat operator*(const Rational& c, Mat a) { return a *= c; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vector operator*(const Mat& a, const Vector& v);

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// a - lambda*I; a must be square.
Mat shift(const Mat& a, const Rational& lambda);

/// Horizontal concatenation [a | b].
Mat hstack(const Mat& a, const Mat& b);

bool is_zero(const Vector& v);

/// Multi-line rendering with space-aligned columns.
std::string to_string(const Mat& m, const std::string& indent = "");

}  // namespace jcf
