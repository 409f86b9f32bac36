#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "jcf/jordan.hpp"
#include "jcf/matrix.hpp"

namespace jcf::testkit {

/// Ground-truth Jordan structure for generated instances.
struct BlockSpec {
  std::vector<EigenBlocks> pairs;

  std::size_t dim() const;
  /// Eigenvalues ascending, sizes descending: the order jordan_form reports.
  BlockSpec canonical() const;
  std::vector<std::size_t> sizes_at(const Rational& lambda) const;
};

/// Block sizes at lambda (descending) from ranks of powers of (A - lambda I):
/// blocks of size exactly i number r_{i-1} - 2 r_i + r_{i+1}.
std::vector<std::size_t> weyr_oracle(const Mat& a, const Rational& lambda);

/// Canonical Jordan matrix realizing spec.
Mat build_jordan_matrix(const BlockSpec& spec);

/// Product of `steps` random elementary row operations on the identity:
/// row swaps or adding k * row i to row j with k in [-bound, bound].
Mat random_unimodular(std::size_t n, std::uint64_t seed, std::size_t steps, int bound);

struct SimilarPair {
  Mat a;
  Mat s;
};

/// a = s * J * s^{-1} with s unimodular; steps defaults to 4n, bound to 3.
SimilarPair random_similar(const BlockSpec& spec, std::uint64_t seed);
SimilarPair random_similar(const BlockSpec& spec, std::uint64_t seed, std::size_t steps, int bound);

/// Random spec of dimension in [1, max_dim] with up to three distinct
/// eigenvalues drawn from small integers and halves.
BlockSpec random_block_spec(std::mt19937_64& rng, std::size_t max_dim);

/// Single eigenvalue 0 with random block sizes, dimension in [1, max_dim].
BlockSpec random_nilpotent_spec(std::mt19937_64& rng, std::size_t max_dim);

/// Random integer vector with entries in [-bound, bound].
Vector random_vector(std::mt19937_64& rng, std::size_t n, int bound);

/// Determinant by fraction-based Gaussian elimination.
Rational determinant(const Mat& m);

/// Column spans equal, decided by ranks of the parts and of their union.
bool same_span(const std::vector<Vector>& u, const std::vector<Vector>& v, std::size_t dim);

/// span(u) is contained in span(v).
bool span_contains(const std::vector<Vector>& v, const std::vector<Vector>& u, std::size_t dim);

}  // namespace jcf::testkit
