#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "jcf/exp.hpp"
#include "jcf/jordan.hpp"
#include "jcf/nilpotent.hpp"
#include "testkit.hpp"

using namespace jcf;

namespace {

Poly t_poly(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }

// lambda*M + M' == A*M for every term, and the terms sum to I at t = 0.
void expect_solves_ode(const Mat& a, const ExpMatrix& e) {
  Mat at_zero = Mat::zero(a.rows(), a.cols());
  for (const auto& term : e.terms) {
    EXPECT_EQ(term.coeff * term.eigenvalue + term.coeff.derivative(), a * term.coeff)
        << "eigenvalue " << term.eigenvalue;
    at_zero += term.coeff.evaluate(Rational(0));
  }
  EXPECT_EQ(at_zero, Mat::identity(a.rows()));
}

}  // namespace

TEST(MatrixExp, NilpotentTwoByTwo) {
  const auto e = matrix_exp(Mat{{0, 1}, {0, 0}});
  ASSERT_EQ(e.terms.size(), 1U);
  EXPECT_EQ(e.terms[0].eigenvalue, Rational(0));
  PolyMatrix expected(2, 2);
  expected(0, 0) = t_poly({1});
  expected(0, 1) = t_poly({0, 1});
  expected(1, 1) = t_poly({1});
  EXPECT_EQ(e.terms[0].coeff, expected);
}

TEST(MatrixExp, Diagonal) {
  const std::vector<Rational> diag{2, 4};
  const auto e = matrix_exp(Mat::diagonal(diag));
  ASSERT_EQ(e.terms.size(), 2U);
  EXPECT_EQ(e.terms[0].eigenvalue, Rational(2));
  EXPECT_EQ(e.terms[0].coeff.evaluate(Rational(0)), (Mat{{1, 0}, {0, 0}}));
  EXPECT_EQ(e.terms[0].coeff.degree(), 0);
  EXPECT_EQ(e.terms[1].eigenvalue, Rational(4));
  EXPECT_EQ(e.terms[1].coeff.evaluate(Rational(0)), (Mat{{0, 0}, {0, 1}}));
}

TEST(MatrixExp, MixedSpectrumRoutesAgree) {
  const Mat a = fixtures::mixed4();
  const auto e = matrix_exp(a);
  EXPECT_EQ(e, matrix_exp_jordan(a));
  EXPECT_NO_THROW(matrix_exp(a, true));
  expect_solves_ode(a, e);
  EXPECT_EQ(e.terms[0].coeff.degree(), 1);  // largest block at 2 has size 2
  EXPECT_EQ(e.terms[1].coeff.degree(), 0);
}

TEST(MatrixExp, RejectsIrrationalSpectrum) {
  EXPECT_THROW(matrix_exp(fixtures::rotation()), IrrationalSpectrum);
}

TEST(MatrixExp, Render) {
  const std::string s = to_string(matrix_exp(Mat{{0, 1}, {0, 0}}));
  EXPECT_EQ(s, "exp(0*t) * [\n  1  t\n  0  1\n]\n");
}

TEST(MatrixExpProperties, RandomInstances) {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    const auto spec = testkit::random_block_spec(rng, 6);
    const Mat a = testkit::random_similar(spec, rng()).a;
    const auto e = matrix_exp(a);
    EXPECT_EQ(e, matrix_exp_jordan(a));
    expect_solves_ode(a, e);
    const auto canon = spec.canonical();
    ASSERT_EQ(e.terms.size(), canon.pairs.size());
    for (std::size_t k = 0; k < e.terms.size(); ++k) {
      EXPECT_EQ(e.terms[k].eigenvalue, canon.pairs[k].eigenvalue);
      EXPECT_LT(e.terms[k].coeff.degree(), static_cast<int>(canon.pairs[k].sizes.front()));
    }
  }
}
