#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jcf/matrix.hpp"

namespace jcf {

/// Block-count invariants of a nilpotent operator A.
///
/// values[i] = dim N(A restricted to R(A^i)) for i = 0..index, so
/// values[i-1] - values[i] is the number of blocks of size exactly i and
/// values[index] == 0.
struct DSequence {
  std::vector<std::size_t> values;
  std::size_t index_of_nilpotency = 0;
  friend bool operator==(const DSequence&, const DSequence&) = default;
};

struct Chain {
  Vector generator;
  std::size_t height = 0;
};

/// Generators of a direct-sum decomposition into cyclic subspaces, sorted
/// by descending height (ties in discovery order).
struct CyclicDecomposition {
  std::vector<Chain> chains;

  std::vector<std::size_t> heights() const;
};

/// Smallest N >= 1 with a^N = 0. Throws NotNilpotent, DimensionMismatch.
std::size_t nilpotency_index(const Mat& a);

/// Smallest h >= 1 with a^h v = 0. Throws ZeroVector, NotNilpotent.
std::size_t height(const Mat& a, const Vector& v);

/// d_i computed as rank(A^i) - rank(A^{i+1}).
DSequence d_sequence(const Mat& a);

/// d_i computed as the nullity of A acting on a column basis of A^i.
/// Independent of d_sequence's rank-difference route; the two must agree.
DSequence d_sequence_restricted(const Mat& a);

/// Jordan block sizes of a nilpotent matrix, descending.
std::vector<std::size_t> block_sizes(const Mat& a);
std::vector<std::size_t> block_sizes(const DSequence& d);

/// Cyclic generators found by descending through the distinct block sizes.
///
/// For each size m (largest first) the generators of size m are coset
/// representatives completing the image of the chains already found to a
/// basis of N(A^m)/N(A^{m-1}). Quotients are never formed explicitly: the
/// basis of N(A^{m-1}) plus the found chain vectors lying in N(A^m) seed
/// extend_independent, and the canonical basis of N(A^m) supplies the
/// candidates.
CyclicDecomposition block_generators(const Mat& a);

/// The chain basis and the nilpotent Jordan matrix it induces.
struct ChainBasis {
  /// Per chain of height h: columns A^{h-1}g, ..., Ag, g.
  Mat p;
  /// Shift blocks (1s on the superdiagonal); a*p == p*j.
  Mat j;
};

/// Throws InvalidDecomposition if heights are wrong or the chain vectors
/// do not form a basis.
ChainBasis chains_to_basis(const Mat& a, const CyclicDecomposition& dec);

/// All chain vectors {A^k g : 0 <= k < height(g)}, chain by chain.
std::vector<Vector> chain_vectors(const Mat& a, const Vector& generator, std::size_t height);

/// Checks that the cyclic subspaces generated by `generators` form a direct
/// sum equal to the whole space. Returns their heights, descending.
/// Throws NotABasis or ZeroVector.
std::vector<std::size_t> validate_generators(const Mat& a, std::span<const Vector> generators);

/// Nilpotent Jordan matrix with the given block sizes in the given order.
Mat shift_blocks(std::span<const std::size_t> sizes);

}  // namespace jcf
