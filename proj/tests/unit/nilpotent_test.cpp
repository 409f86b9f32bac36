#include <gtest/gtest.h>

#include <map>
#include <random>

#include "fixtures.hpp"
#include "jcf/errors.hpp"
#include "jcf/linalg.hpp"
#include "jcf/nilpotent.hpp"
#include "testkit.hpp"

using namespace jcf;
using fixtures::unit;
using Sizes = std::vector<std::size_t>;

namespace {

Mat shift_block(std::size_t n) {
  const Sizes s{n};
  return shift_blocks(s);
}

}  // namespace

TEST(NilpotencyIndex, Examples) {
  EXPECT_EQ(nilpotency_index(fixtures::nil7()), 6U);
  EXPECT_EQ(nilpotency_index(Mat::zero(3, 3)), 1U);
  EXPECT_EQ(nilpotency_index(fixtures::chain4()), 4U);
}

TEST(NilpotencyIndex, RejectsNonNilpotent) {
  EXPECT_THROW(nilpotency_index(Mat::identity(2)), NotNilpotent);
  EXPECT_THROW(nilpotency_index(fixtures::mixed4()), NotNilpotent);
  EXPECT_THROW(nilpotency_index(Mat(2, 3)), DimensionMismatch);
  EXPECT_THROW(nilpotency_index(Mat()), DimensionMismatch);
}

TEST(Height, Examples) {
  EXPECT_EQ(height(fixtures::chain4(), unit(4, 3)), 4U);
  EXPECT_EQ(height(fixtures::chain4(), unit(4, 0)), 1U);
  EXPECT_EQ(height(fixtures::nil7(), unit(7, 6)), 6U);
  EXPECT_THROW(height(fixtures::chain4(), Vector(4)), ZeroVector);
}

TEST(DSequence, Examples) {
  EXPECT_EQ(d_sequence(fixtures::mixed4_nilpotent_part()).values, (Sizes{2, 1, 0}));
  EXPECT_EQ(d_sequence(shift_block(5)).values, (Sizes{1, 1, 1, 1, 1, 0}));
  const auto zero = d_sequence(Mat::zero(3, 3));
  EXPECT_EQ(zero.values, (Sizes{3, 0}));
  EXPECT_EQ(zero.index_of_nilpotency, 1U);
  EXPECT_THROW(d_sequence(Mat::identity(2)), NotNilpotent);
}

TEST(BlockSizes, Examples) {
  EXPECT_EQ(block_sizes(fixtures::chain4()), (Sizes{4}));
  EXPECT_EQ(block_sizes(fixtures::mixed4_nilpotent_part()), (Sizes{2, 1}));
  EXPECT_EQ(block_sizes(fixtures::nil7()), (Sizes{6, 1}));
  EXPECT_EQ(block_sizes(fixtures::shift5_sparse()), (Sizes{5}));
  EXPECT_EQ(block_sizes(fixtures::shift5_dense()), (Sizes{5}));
}

TEST(BlockGenerators, SingleChain) {
  const auto dec = block_generators(fixtures::chain4());
  ASSERT_EQ(dec.chains.size(), 1U);
  EXPECT_EQ(dec.chains[0].generator, unit(4, 3));
  EXPECT_EQ(dec.chains[0].height, 4U);
}

TEST(BlockGenerators, ZeroMatrix) {
  const auto dec = block_generators(Mat::zero(2, 2));
  ASSERT_EQ(dec.chains.size(), 2U);
  EXPECT_EQ(dec.chains[0].generator, unit(2, 0));
  EXPECT_EQ(dec.chains[1].generator, unit(2, 1));
  EXPECT_EQ(dec.heights(), (Sizes{1, 1}));
}

TEST(BlockGenerators, SevenBySeven) {
  const Mat a = fixtures::nil7();
  const auto dec = block_generators(a);
  EXPECT_EQ(dec.heights(), (Sizes{6, 1}));
  std::vector<Vector> gens;
  for (const auto& c : dec.chains) gens.push_back(c.generator);
  EXPECT_EQ(validate_generators(a, gens), (Sizes{6, 1}));
}

TEST(ValidateGenerators, PublishedGenerators) {
  const std::vector<Vector> gens{fixtures::nil7_generator_short(), fixtures::nil7_generator_long()};
  EXPECT_EQ(validate_generators(fixtures::nil7(), gens), (Sizes{6, 1}));
  EXPECT_EQ(validate_generators(fixtures::chain4(), std::vector<Vector>{unit(4, 3)}), (Sizes{4}));
}

TEST(ValidateGenerators, Failures) {
  // A e1 = 0: a single vector of height 1 cannot span four dimensions.
  EXPECT_THROW(validate_generators(fixtures::chain4(), std::vector<Vector>{unit(4, 0)}), NotABasis);
  // Right count, but e1 lies inside the chain of e4.
  EXPECT_THROW(validate_generators(fixtures::nil7(), std::vector<Vector>{unit(7, 6), unit(7, 0)}), NotABasis);
  EXPECT_THROW(validate_generators(fixtures::chain4(), std::vector<Vector>{Vector(4)}), ZeroVector);
}

TEST(ChainsToBasis, SingleChain) {
  const Mat a = fixtures::chain4();
  const auto basis = chains_to_basis(a, block_generators(a));
  EXPECT_EQ(basis.j, shift_block(4));
  EXPECT_EQ(a * basis.p, basis.p * basis.j);
  EXPECT_EQ(basis.p.column(3), unit(4, 3));
}

TEST(ChainsToBasis, ZeroMatrixUnitChains) {
  const auto basis = chains_to_basis(Mat::zero(3, 3), block_generators(Mat::zero(3, 3)));
  EXPECT_EQ(basis.p, Mat::identity(3));
  EXPECT_TRUE(basis.j.is_zero());
}

TEST(ChainsToBasis, DescendingBlockOrder) {
  const Mat a = fixtures::mixed4_nilpotent_part();
  const auto basis = chains_to_basis(a, block_generators(a));
  EXPECT_EQ(basis.j, (Mat{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(a * basis.p, basis.p * basis.j);
}

TEST(ChainsToBasis, RejectsBadDecompositions) {
  const Mat a = fixtures::chain4();
  CyclicDecomposition wrong_height{{Chain{unit(4, 3), 3}}};
  EXPECT_THROW(chains_to_basis(a, wrong_height), InvalidDecomposition);
  CyclicDecomposition too_small{{Chain{unit(4, 1), 2}}};
  EXPECT_THROW(chains_to_basis(a, too_small), InvalidDecomposition);
}

class NilpotentProperties : public ::testing::Test {
 protected:
  static constexpr int kInstances = 120;
  std::mt19937_64 rng{314159};

  testkit::SimilarPair next(testkit::BlockSpec& spec) {
    spec = testkit::random_nilpotent_spec(rng, 8);
    return testkit::random_similar(spec, rng());
  }
};

TEST_F(NilpotentProperties, ChainsFromAnyVectorAreIndependent) {
  for (int i = 0; i < kInstances; ++i) {
    testkit::BlockSpec spec;
    const auto [a, s] = next(spec);
    Vector v = testkit::random_vector(rng, a.rows(), 3);
    if (is_zero(v)) v[0] = Rational(1);
    const std::size_t h = height(a, v);
    EXPECT_EQ(rank_of(chain_vectors(a, v, h), a.rows()), h);
  }
}

TEST_F(NilpotentProperties, DSequenceRoutesAgree) {
  for (int i = 0; i < kInstances; ++i) {
    testkit::BlockSpec spec;
    const auto [a, s] = next(spec);
    const DSequence d = d_sequence(a);
    EXPECT_EQ(d, d_sequence_restricted(a));
    // Weakly decreasing, ends at zero, first entry is the nullity.
    EXPECT_EQ(d.values.back(), 0U);
    EXPECT_TRUE(std::is_sorted(d.values.rbegin(), d.values.rend()));
    EXPECT_EQ(d.values.front(), nullspace_basis(a).size());
    std::size_t total = 0;
    for (std::size_t k = 1; k < d.values.size(); ++k) total += k * (d.values[k - 1] - d.values[k]);
    EXPECT_EQ(total, a.rows());
  }
}

TEST_F(NilpotentProperties, BlockSizesMatchOracleAndSpec) {
  for (int i = 0; i < kInstances; ++i) {
    testkit::BlockSpec spec;
    const auto [a, s] = next(spec);
    const auto sizes = block_sizes(a);
    EXPECT_EQ(sizes, testkit::weyr_oracle(a, Rational(0)));
    EXPECT_EQ(sizes, spec.sizes_at(Rational(0)));
    EXPECT_EQ(sizes.size(), nullspace_basis(a).size());
  }
}

TEST_F(NilpotentProperties, GeneratorsAlwaysValidate) {
  for (int i = 0; i < kInstances; ++i) {
    testkit::BlockSpec spec;
    const auto [a, s] = next(spec);
    const auto dec = block_generators(a);
    EXPECT_EQ(dec.heights(), block_sizes(a));
    std::vector<Vector> gens;
    for (const auto& c : dec.chains) gens.push_back(c.generator);
    EXPECT_EQ(validate_generators(a, gens), dec.heights());
    const auto basis = chains_to_basis(a, dec);
    EXPECT_EQ(a * basis.p, basis.p * basis.j);
  }
}

// For k equal blocks of size n: inside their sum W, ker A^j = im A^{n-j} for 0 < j < n.
TEST_F(NilpotentProperties, KernelEqualsRangeOnEqualBlocks) {
  std::uniform_int_distribution<std::size_t> size(2, 4);
  std::uniform_int_distribution<std::size_t> copies(1, 2);
  for (int i = 0; i < kInstances; ++i) {
    const std::size_t n = size(rng);
    const std::size_t k = copies(rng);
    testkit::BlockSpec spec{{EigenBlocks{Rational(0), Sizes(k, n)}}};
    auto extra = testkit::random_nilpotent_spec(rng, 3).pairs.front().sizes;
    for (auto e : extra) {
      if (e < n) spec.pairs.front().sizes.push_back(e);
    }
    const auto [a, s] = testkit::random_similar(spec, rng());
    // Equal blocks come first in canonical order, so W is spanned by s's first n*k columns.
    std::vector<Vector> w;
    for (std::size_t c = 0; c < n * k; ++c) w.push_back(s.column(c));
    const Mat b = Mat::from_columns(w, a.rows());
    const Mat m = solve_right(b, a * b);
    for (std::size_t j = 1; j < n; ++j) {
      EXPECT_TRUE(testkit::same_span(nullspace_basis(mat_pow(m, j)), column_space_basis(mat_pow(m, n - j)), n * k))
          << "n=" << n << " j=" << j;
    }
  }
}

// With mixed sizes >= n in W only the inclusion ker A^j ⊆ im A^{n-j} survives.
TEST_F(NilpotentProperties, KernelInsideRangeOnMixedBlocks) {
  for (int i = 0; i < kInstances; ++i) {
    testkit::BlockSpec spec;
    const auto [a, s] = next(spec);
    const std::size_t n = spec.canonical().pairs.front().sizes.back();
    for (std::size_t j = 1; j < n; ++j) {
      EXPECT_TRUE(testkit::span_contains(column_space_basis(mat_pow(a, n - j)), nullspace_basis(mat_pow(a, j)),
                                         a.rows()));
    }
  }
}

// Generators of equal-height chains stay independent modulo N(A^{n-1}).
TEST_F(NilpotentProperties, EqualHeightGeneratorsIndependentInQuotient) {
  for (int i = 0; i < kInstances; ++i) {
    testkit::BlockSpec spec;
    const auto [a, s] = next(spec);
    const auto canon = spec.canonical().pairs.front().sizes;
    // Generator of each block is its last column in s.
    std::size_t col = 0;
    std::map<std::size_t, std::vector<Vector>> by_height;
    for (auto size : canon) {
      col += size;
      by_height[size].push_back(s.column(col - 1));
    }
    for (const auto& [h, gens] : by_height) {
      auto stacked = nullspace_basis(mat_pow(a, h - 1));
      const std::size_t base = stacked.size();
      stacked.insert(stacked.end(), gens.begin(), gens.end());
      EXPECT_EQ(rank_of(stacked, a.rows()), base + gens.size()) << "height " << h;
    }
  }
}
