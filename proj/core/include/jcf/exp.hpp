#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "jcf/matrix.hpp"
#include "jcf/poly.hpp"

namespace jcf {

/// Dense matrix whose entries are polynomials in t.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Sum over k of t^k * terms[k].
  static PolyMatrix from_coefficients(std::span<const Mat> terms);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Largest entry degree (-1 if every entry is zero).
  int degree() const;
  Mat evaluate(const Rational& t) const;
  PolyMatrix derivative() const;

  PolyMatrix& operator+=(const PolyMatrix& rhs);
  PolyMatrix& operator*=(const Rational& c);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator*(PolyMatrix a, const Rational& c) { return a *= c; }
  friend PolyMatrix operator*(const Mat& a, const PolyMatrix& b);

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

struct ExpTerm {
  Rational eigenvalue;
  PolyMatrix coeff;
  friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};

/// exp(tA) = sum over terms of exp(eigenvalue * t) * coeff(t); ascending eigenvalue.
struct ExpMatrix {
  std::vector<ExpTerm> terms;
  friend bool operator==(const ExpMatrix&, const ExpMatrix&) = default;
};

/// Closed-form exp(tA) computed in a basis of generalized eigenvectors:
/// on each V_(lambda), exp(tA) = e^{lambda t} sum_{k<m} t^k (A - lambda I)^k / k!.
/// With cross_check set, the Jordan route is also evaluated and an
/// InternalInconsistency is raised if the two disagree.
ExpMatrix matrix_exp(const Mat& a, bool cross_check = false);

/// The same exponential as P exp(tJ) P^{-1} from jordan_form(a).
ExpMatrix matrix_exp_jordan(const Mat& a);

/// Renders one line per term: `exp(lambda*t) * [ ... ]`.
std::string to_string(const ExpMatrix& e);

}  // namespace jcf
