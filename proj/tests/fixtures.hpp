#pragma once

// Reference matrices shared by the unit and acceptance suites.

#include "jcf/matrix.hpp"

namespace jcf::fixtures {

/// 4x4 nilpotent with a single Jordan block; e4 generates it.
inline Mat chain4() {
  return Mat{{0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}};
}

/// Eigenvalue 2 with blocks {2,1} on span{e1,e2,e3}, eigenvalue 4 simple.
inline Mat mixed4() {
  return Mat{{2, 0, 2, 1}, {0, 2, 1, 1}, {0, 0, 2, 2}, {0, 0, 0, 4}};
}

/// mixed4 restricted to span{e1,e2,e3}.
inline Mat mixed4_restricted() { return Mat{{2, 0, 2}, {0, 2, 1}, {0, 0, 2}}; }

/// mixed4_restricted - 2I.
inline Mat mixed4_nilpotent_part() { return Mat{{0, 0, 2}, {0, 0, 1}, {0, 0, 0}}; }

/// Canonical Jordan form of mixed4 (blocks of one eigenvalue by descending size).
inline Mat mixed4_jordan() {
  return Mat{{2, 1, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 4}};
}

/// Same blocks with the size-1 block first.
inline Mat mixed4_jordan_small_first() {
  return Mat{{2, 0, 0, 0}, {0, 2, 1, 0}, {0, 0, 2, 0}, {0, 0, 0, 4}};
}

/// Strictly upper triangular 5x5 with a nonsingular superdiagonal, sparse.
inline Mat shift5_sparse() {
  return Mat{{0, 2, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, -2}, {0, 0, 0, 0, 0}};
}

/// Strictly upper triangular 5x5 with a nonsingular superdiagonal, dense.
inline Mat shift5_dense() {
  return Mat{{0, 1, 2, 3, 4}, {0, 0, 7, 6, 5}, {0, 0, 0, 8, 9}, {0, 0, 0, 0, 10}, {0, 0, 0, 0, 0}};
}

/// 7x7 nilpotent of index 6 with blocks {6,1}.
inline Mat nil7() {
  return Mat{{0, 1, 4, 5, 6, 7, 8},   {0, 0, 1, 6, 7, 8, 9},  {0, 0, 0, 0, 7, 8, 9},
             {0, 0, 0, 0, 0, 10, 11}, {0, 0, 0, 0, 0, 11, 12}, {0, 0, 0, 0, 0, 0, 1},
             {0, 0, 0, 0, 0, 0, 0}};
}

/// Published generators for nil7's size-1 and size-6 blocks.
inline Vector nil7_generator_short() { return {0, 19, -6, 1, 0, 0, 0}; }
inline Vector nil7_generator_long() { return {0, 0, 0, 0, 0, 0, 1}; }

inline Mat rotation() { return Mat{{0, -1}, {1, 0}}; }

inline Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = Rational(1);
  return v;
}

}  // namespace jcf::fixtures
