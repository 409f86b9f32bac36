#include "jcf/linalg.hpp"

#include <utility>

#include "jcf/errors.hpp"

namespace jcf {

RrefResult rref(const Mat& m) {
  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    }
    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivot_columns.size(); }

std::vector<Vector> nullspace_basis(const Mat& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> column_space_basis(const Mat& m) {
  std::vector<Vector> out;
  for (auto p : rref(m).pivot_columns) out.push_back(m.column(p));
  return out;
}

Mat solve_right(const Mat& b, const Mat& c) {
  if (b.rows() != c.rows()) throw DimensionMismatch("solve_right: row counts differ");
  const std::size_t k = b.cols();
  const auto [reduced, pivots] = rref(hstack(b, c));
  std::size_t b_rank = 0;
  for (auto p : pivots) {
    if (p < k) {
      ++b_rank;
    } else {
      if (b_rank < k) break;
      throw NoSolution("solve_right: right-hand side column " + std::to_string(p - k) + " is outside the span");
    }
  }
  if (b_rank < k) throw RankDeficient("solve_right: columns of the left operand are dependent");
  Mat x(k, c.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) x(i, j) = reduced(i, k + j);
  return x;
}

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  try {
    return solve_right(m, Mat::identity(m.rows()));
  } catch (const RankDeficient&) {
    throw Singular("matrix is singular");
  }
}

Mat mat_pow(const Mat& m, std::size_t k) {
  if (!m.is_square()) throw DimensionMismatch("mat_pow requires a square matrix");
  Mat result = Mat::identity(m.rows());
  Mat base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::size_t rank_of(std::span<const Vector> vectors, std::size_t dim) {
  IndependenceTracker t(dim);
  for (const auto& v : vectors) t.add(v);
  return t.rank();
}

std::vector<Vector> extend_independent(std::span<const Vector> existing, std::span<const Vector> candidates) {
  std::size_t dim = 0;
  if (!existing.empty()) {
    dim = existing.front().size();
  } else if (!candidates.empty()) {
    dim = candidates.front().size();
  }
  IndependenceTracker t(dim);
  for (const auto& v : existing) t.add(v);
  std::vector<Vector> kept;
  for (const auto& v : candidates) {
    if (t.add(v)) kept.push_back(v);
  }
  return kept;
}

Vector IndependenceTracker::reduce(Vector v) const {
  if (v.size() != dim_) throw DimensionMismatch("vector length does not match tracker dimension");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (!basis_[i][c].is_zero()) v[c] -= f * basis_[i][c];
    }
  }
  return v;
}

bool IndependenceTracker::is_independent(const Vector& v) const { return !is_zero(reduce(v)); }

bool IndependenceTracker::add(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Rational inv = Rational(1) / r[p];
  for (auto& x : r) x *= inv;
  // Keep the stored rows fully reduced against the new pivot.
  for (auto& b : basis_) {
    const Rational f = b[p];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (!r[c].is_zero()) b[c] -= f * r[c];
    }
  }
  basis_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

}  // namespace jcf
