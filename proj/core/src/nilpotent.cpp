#include "jcf/nilpotent.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "jcf/errors.hpp"
#include "jcf/linalg.hpp"

namespace jcf {

namespace {

void require_operator(const Mat& a) {
  if (!a.is_square()) throw DimensionMismatch("expected a square matrix");
  if (a.rows() == 0) throw DimensionMismatch("expected a matrix of dimension >= 1");
}

}  // namespace

std::vector<std::size_t> CyclicDecomposition::heights() const {
  std::vector<std::size_t> h;
  h.reserve(chains.size());
  for (const auto& c : chains) h.push_back(c.height);
  return h;
}

std::size_t nilpotency_index(const Mat& a) {
  require_operator(a);
  Mat power = a;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    if (power.is_zero()) return k;
    power = power * a;
  }
  throw NotNilpotent("A^" + std::to_string(a.rows()) + " is nonzero");
}

std::size_t height(const Mat& a, const Vector& v) {
  require_operator(a);
  if (v.size() != a.rows()) throw DimensionMismatch("vector length does not match operator");
  if (is_zero(v)) throw ZeroVector("height of the zero vector");
  Vector w = v;
  for (std::size_t h = 1; h <= a.rows(); ++h) {
    w = a * w;
    if (is_zero(w)) return h;
  }
  throw NotNilpotent("vector is not annihilated by A^dim");
}

DSequence d_sequence(const Mat& a) {
  const std::size_t n = nilpotency_index(a);
  std::vector<std::size_t> ranks;
  ranks.reserve(n + 2);
  Mat power = Mat::identity(a.rows());
  for (std::size_t i = 0; i <= n + 1; ++i) {
    ranks.push_back(i <= n ? rank(power) : 0);
    if (i < n) power = power * a;
  }
  DSequence d;
  d.index_of_nilpotency = n;
  for (std::size_t i = 0; i <= n; ++i) d.values.push_back(ranks[i] - ranks[i + 1]);
  return d;
}

DSequence d_sequence_restricted(const Mat& a) {
  const std::size_t n = nilpotency_index(a);
  DSequence d;
  d.index_of_nilpotency = n;
  Mat power = Mat::identity(a.rows());
  for (std::size_t i = 0; i <= n; ++i) {
    const auto range = column_space_basis(power);
    if (range.empty()) {
      d.values.push_back(0);
    } else {
      // Columns of B are independent, so N(A*B) is the kernel of A on R(A^i) in B-coordinates.
      const Mat b = Mat::from_columns(range, a.rows());
      d.values.push_back(nullspace_basis(a * b).size());
    }
    if (i < n) power = power * a;
  }
  return d;
}

std::vector<std::size_t> block_sizes(const DSequence& d) {
  std::vector<std::size_t> sizes;
  for (std::size_t size = d.index_of_nilpotency; size >= 1; --size) {
    sizes.insert(sizes.end(), d.values[size - 1] - d.values[size], size);
  }
  return sizes;
}

std::vector<std::size_t> block_sizes(const Mat& a) { return block_sizes(d_sequence(a)); }

std::vector<Vector> chain_vectors(const Mat& a, const Vector& generator, std::size_t height) {
  std::vector<Vector> out;
  out.reserve(height);
  Vector w = generator;
  for (std::size_t k = 0; k < height; ++k) {
    out.push_back(w);
    if (k + 1 < height) w = a * w;
  }
  return out;
}

CyclicDecomposition block_generators(const Mat& a) {
  const DSequence d = d_sequence(a);
  const std::size_t dim = a.rows();

  // Canonical kernels of A^k for k = 0..N.
  std::vector<std::vector<Vector>> kernels;
  {
    Mat power = Mat::identity(dim);
    for (std::size_t k = 0; k <= d.index_of_nilpotency; ++k) {
      kernels.push_back(nullspace_basis(power));
      power = power * a;
    }
  }

  CyclicDecomposition dec;
  // Chain vectors already placed, A^j g stored with j = 0..h-1.
  std::vector<std::vector<Vector>> placed;

  for (std::size_t m = d.index_of_nilpotency; m >= 1; --m) {
    const std::size_t wanted = d.values[m - 1] - d.values[m];
    if (wanted == 0) continue;

    std::vector<Vector> existing = kernels[m - 1];
    for (std::size_t c = 0; c < dec.chains.size(); ++c) {
      // A^j g lies in N(A^m) exactly when j >= h - m.
      const std::size_t h = dec.chains[c].height;
      for (std::size_t j = h - m; j < h; ++j) existing.push_back(placed[c][j]);
    }
    const auto fresh = extend_independent(existing, kernels[m]);
    if (fresh.size() != wanted) {
      throw InternalInconsistency("found " + std::to_string(fresh.size()) + " generators of height " +
                                  std::to_string(m) + ", expected " + std::to_string(wanted));
    }
    for (const auto& g : fresh) {
      dec.chains.push_back({g, m});
      placed.push_back(chain_vectors(a, g, m));
    }
  }
  return dec;
}

Mat shift_blocks(std::span<const std::size_t> sizes) {
  std::size_t n = 0;
  for (auto s : sizes) n += s;
  Mat j(n, n);
  std::size_t offset = 0;
  for (auto s : sizes) {
    for (std::size_t k = 0; k + 1 < s; ++k) j(offset + k, offset + k + 1) = Rational(1);
    offset += s;
  }
  return j;
}

ChainBasis chains_to_basis(const Mat& a, const CyclicDecomposition& dec) {
  require_operator(a);
  std::vector<Vector> columns;
  std::vector<std::size_t> sizes;
  for (const auto& chain : dec.chains) {
    if (chain.generator.size() != a.rows()) throw InvalidDecomposition("generator length mismatch");
    if (chain.height == 0 || is_zero(chain.generator)) throw InvalidDecomposition("empty chain");
    auto vs = chain_vectors(a, chain.generator, chain.height);
    if (is_zero(vs.back()) || !is_zero(a * vs.back())) {
      throw InvalidDecomposition("generator does not have its recorded height " + std::to_string(chain.height));
    }
    columns.insert(columns.end(), vs.rbegin(), vs.rend());
    sizes.push_back(chain.height);
  }
  if (columns.size() != a.rows() || rank_of(columns, a.rows()) != a.rows()) {
    throw InvalidDecomposition("chain vectors do not form a basis");
  }
  ChainBasis out{Mat::from_columns(columns, a.rows()), shift_blocks(sizes)};
  return out;
}

std::vector<std::size_t> validate_generators(const Mat& a, std::span<const Vector> generators) {
  require_operator(a);
  std::vector<std::size_t> heights;
  std::vector<Vector> vectors;
  for (const auto& g : generators) {
    const std::size_t h = height(a, g);
    heights.push_back(h);
    auto vs = chain_vectors(a, g, h);
    vectors.insert(vectors.end(), vs.begin(), vs.end());
  }
  if (vectors.size() != a.rows()) {
    throw NotABasis("chains contain " + std::to_string(vectors.size()) + " vectors in dimension " +
                    std::to_string(a.rows()));
  }
  if (rank_of(vectors, a.rows()) != a.rows()) throw NotABasis("chain vectors are dependent");
  std::sort(heights.begin(), heights.end(), std::greater<>());
  return heights;
}

}  // namespace jcf
