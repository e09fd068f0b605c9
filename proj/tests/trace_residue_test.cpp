#include <gtest/gtest.h>

#include <random>

#include "isocrystal/error.hpp"
#include "isocrystal/trace_residue.hpp"
#include "oracles/random.hpp"

namespace isocrystal {
namespace {

Rational q(long a, long b = 1) { return Rational(Integer(a), Integer(b)); }

Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }

PowerTraceSeries series(std::vector<long> v) {
  PowerTraceSeries s;
  for (long x : v) s.coeffs.emplace_back(x);
  return s;
}

Matrix diag(std::vector<Rational> d) { return Matrix::diagonal(d); }

Matrix jordan(std::size_t n, const Rational& lambda) {
  Matrix j = Matrix::scalar(n, lambda);
  for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = Rational(1);
  return j;
}

TEST(PowerTraces, Examples) {
  const auto s = power_traces(Matrix::identity(2), diag({q(2), q(3)}), 4);
  EXPECT_EQ(s.coeffs, series({5, 13, 35, 97}).coeffs);
  const Matrix u = Matrix::from_rows({{1, 2}, {3, 4}});
  EXPECT_EQ(power_traces(u, Matrix::identity(2), 3).coeffs, series({5, 5, 5}).coeffs);
  EXPECT_EQ(power_traces(Matrix(2, 2), jordan(2, q(3)), 3).coeffs, series({0, 0, 0}).coeffs);
}

TEST(PowerTraces, Errors) {
  try {
    power_traces(Matrix::identity(2), Matrix::from_rows({{1, 2}, {2, 4}}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularV);
  }
  EXPECT_THROW(power_traces(Matrix::identity(2), Matrix::identity(3), 3), Error);
}

TEST(Reconstruct, GeometricSeries) {
  const auto f = reconstruct_rational(series({1, 2, 4, 8}), 1, 0);
  EXPECT_EQ(f.den(), poly({q(-1, 2), q(1)}));
  EXPECT_EQ(f.num(), poly({q(-1, 2)}));
  const auto c = reconstruct_rational(series({7, 7, 7}), 1, 0);
  EXPECT_EQ(c.den(), poly({q(-1), q(1)}));
  EXPECT_EQ(c.num(), poly({q(-7)}));
}

TEST(Reconstruct, TwoPoles) {
  const auto f = reconstruct_rational(series({5, 13, 35, 97, 275}), 2, 1);
  // den has roots 1/2 and 1/3.
  EXPECT_TRUE(f.den().evaluate(q(1, 2)).is_zero());
  EXPECT_TRUE(f.den().evaluate(q(1, 3)).is_zero());
  EXPECT_EQ(f.den().degree(), 2);
  EXPECT_LT(f.num().degree(), f.den().degree());
  EXPECT_EQ(f.taylor(6), series({5, 13, 35, 97, 275, 793}).coeffs);
}

TEST(Reconstruct, Errors) {
  try {
    reconstruct_rational(series({1, 2}), 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated);
  }
  try {
    // T is not c / (a + bT) with a != 0 to order 2.
    reconstruct_rational(series({0, 1}), 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kReconstructionFailed);
  }
}

TEST(ResidueAtInfinity, Examples) {
  for (long lambda : {1L, 2L, -3L, 7L}) {
    // lambda / (1 - lambda T)
    const RationalFunction f(poly({q(lambda)}), poly({q(1), q(-lambda)}));
    EXPECT_EQ(residue_at_infinity(f), q(1));
  }
  EXPECT_EQ(residue_at_infinity(RationalFunction(poly({q(5, 3)}), poly({q(1), q(-1)}))), q(5, 3));
  EXPECT_EQ(residue_at_infinity(RationalFunction(poly({q(1), q(2), q(3)}), poly({q(1)}))), q(0));
}

TEST(RecoverTrace, Examples) {
  EXPECT_EQ(recover_trace(Matrix::identity(2), diag({q(2), q(3)})), q(2));
  EXPECT_EQ(recover_trace(Matrix::from_rows({{0, 1}, {1, 0}}), Matrix::from_rows({{1, 1}, {0, 1}})), q(0));
  const Matrix u = Matrix::from_rows({{q(1, 2), 2, 0}, {3, q(-4, 3), 1}, {0, 0, 5}});
  EXPECT_EQ(recover_trace(u, Matrix::identity(3)), u.trace());
}

TEST(RecoverTrace, RandomPairs) {
  std::mt19937_64 rng(8011);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = size(rng);
    const Matrix u = testing::random_matrix(rng, n);
    const Matrix v = testing::random_invertible(rng, n);
    ASSERT_EQ(recover_trace(u, v), u.trace()) << "trial " << t;
    const auto f = reconstruct_rational(power_traces(u, v, 2 * n), static_cast<int>(n), static_cast<int>(n) - 1);
    EXPECT_LE(f.den().degree(), static_cast<int>(n));
    EXPECT_LT(f.num().degree(), f.den().degree());
  }
}

TEST(RecoverTrace, JordanBlocks) {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 6; ++n)
    for (long lambda : {1L, -2L, 5L}) {
      const Matrix u = testing::random_matrix(rng, n);
      EXPECT_EQ(recover_trace(u, jordan(n, q(lambda))), u.trace());
      EXPECT_EQ(recover_trace(u, jordan(n, q(lambda, 3))), u.trace());
    }
}

TEST(RecoverTraceFromTail, Examples) {
  auto s = power_traces(Matrix::identity(2), diag({q(2), q(3)}), 6);
  s.coeffs[0] = q(999);
  EXPECT_EQ(recover_trace_from_tail(s, 2, 1), q(2));
  const Matrix u = Matrix::from_rows({{1, 2}, {3, 4}});
  const Matrix v = Matrix::from_rows({{2, 1}, {1, 1}});
  EXPECT_EQ(recover_trace_from_tail(power_traces(u, v, 4), 2, 0), recover_trace(u, v));
  auto z = power_traces(u, Matrix::identity(2), 8);
  z.coeffs[0] = z.coeffs[1] = q(0);
  EXPECT_EQ(recover_trace_from_tail(z, 2, 2), q(5));
}

TEST(RecoverTraceFromTail, CorruptionInvariance) {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::uniform_int_distribution<int> kdist(0, 3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = size(rng);
    const int k = kdist(rng);
    const Matrix u = testing::random_matrix(rng, n);
    const Matrix v = testing::random_invertible(rng, n);
    auto s = power_traces(u, v, 2 * n + 2 * static_cast<std::size_t>(k));
    const Rational clean = recover_trace_from_tail(s, static_cast<int>(n), k);
    for (int i = 0; i < k; ++i) s.coeffs[static_cast<std::size_t>(i)] = testing::random_rational(rng, 1000);
    EXPECT_EQ(recover_trace_from_tail(s, static_cast<int>(n), k), clean);
    EXPECT_EQ(clean, u.trace());
  }
}

}  // namespace
}  // namespace isocrystal
