#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jcf/matrix.hpp"

namespace jcf {

struct RrefResult {
  Mat reduced;
  /// Strictly increasing.
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form.
///
/// Pivot rule: in the leftmost unresolved column, the first nonzero entry
/// scanning downward from the current row. No magnitude pivoting.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

/// Canonical nullspace basis: one vector per free column of rref(m), in
/// ascending free-column order, with a 1 in that column and the pivot
/// entries read off the reduced rows.
std::vector<Vector> nullspace_basis(const Mat& m);

/// Basis of the column span of m: the columns of m at the pivot positions of rref(m).
std::vector<Vector> column_space_basis(const Mat& m);

/// Returns x with b * x = c. Throws RankDeficient if the columns of b are
/// dependent, NoSolution if a column of c is outside their span.
Mat solve_right(const Mat& b, const Mat& c);

/// Exact inverse; throws Singular or DimensionMismatch.
Mat inverse(const Mat& m);

/// m^k by repeated squaring; m^0 is the identity.
Mat mat_pow(const Mat& m, std::size_t k);

/// Rank of the vectors stacked as columns (vectors of length `dim`).
std::size_t rank_of(std::span<const Vector> vectors, std::size_t dim);

/// Greedy completion: scans `candidates` in order and keeps each one that
/// raises the rank of existing ∪ kept. Returns the kept vectors.
std::vector<Vector> extend_independent(std::span<const Vector> existing, std::span<const Vector> candidates);

/// Incremental row-echelon accumulator used for repeated independence tests.
class IndependenceTracker {
 public:
  explicit IndependenceTracker(std::size_t dim) : dim_(dim) {}

  /// Adds v if it is independent of everything added so far; returns whether it was.
  bool add(const Vector& v);
  bool is_independent(const Vector& v) const;
  std::size_t rank() const { return basis_.size(); }

 private:
  Vector reduce(Vector v) const;

  std::size_t dim_;
  // Each stored vector has a 1 at its pivot and zeros at all other pivots.
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace jcf
