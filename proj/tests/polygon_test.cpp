#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "isocrystal/error.hpp"
#include "isocrystal/polygon.hpp"

namespace isocrystal {
namespace {

Rational q(long a, long b = 1) { return Rational(Integer(a), Integer(b)); }

NewtonPoint np(std::vector<Rational> v) { return NewtonPoint(std::move(v)); }

// Weakly decreasing vectors of a fixed length and total, denominators <= 6.
NewtonPoint random_point(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<long> num(0, 12);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<Rational> v;
  for (std::size_t i = 0; i < len; ++i) v.push_back(q(num(rng), den(rng)));
  return sort_dominant(std::move(v));
}

TEST(NewtonPoint, FromSlopes) {
  EXPECT_EQ(newton_point(SlopeDatum({{q(1, 2), 1}}), 1), np({q(1, 2), q(1, 2)}));
  EXPECT_EQ(newton_point(SlopeDatum({{q(1), 1}, {q(0), 1}}), 1), np({q(1), q(0)}));
  EXPECT_EQ(newton_point(SlopeDatum({{q(1, 2), 1}}), 2), np({q(1, 4), q(1, 4)}));
  EXPECT_EQ(newton_point(SlopeDatum({{q(2, 3), 2}, {q(0), 1}}), 1).size(), 7u);
}

TEST(NewtonPoint, EndpointTimesDegreeIsKappa) {
  const SlopeDatum s({{q(5, 3), 2}, {q(1, 2), 1}, {q(0), 3}});
  for (int d = 1; d <= 4; ++d) EXPECT_EQ(newton_point(s, d).sum() * Rational(d), q(5 * 2 + 1 * 1));
}

TEST(SlopeDatum, RejectsBadBlocks) {
  EXPECT_THROW(SlopeDatum({{q(0), 1}, {q(1), 1}}), Error);
  EXPECT_THROW(SlopeDatum({{q(1), 0}}), Error);
  EXPECT_THROW(NewtonPoint({q(0), q(1)}), Error);
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(dominance_leq(np({q(1, 2), q(1, 2)}), np({q(1), q(0)}), true));
  EXPECT_TRUE(dominance_leq(np({q(1), q(0)}), np({q(1), q(0)}), true));
  EXPECT_FALSE(dominance_leq(np({q(1), q(0)}), np({q(1, 2), q(1, 2)}), true));
  EXPECT_FALSE(dominance_leq(np({q(1, 2), q(0)}), np({q(1), q(0)}), true));
  EXPECT_TRUE(dominance_leq(np({q(1, 2), q(0)}), np({q(1), q(0)}), false));
  try {
    dominance_leq(np({q(1)}), np({q(1), q(0)}), true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(Dominance, IsAPartialOrder) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> len(1, 8);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = len(rng);
    const NewtonPoint a = random_point(rng, n), b = random_point(rng, n), c = random_point(rng, n);
    for (bool endpoint : {false, true}) {
      EXPECT_TRUE(dominance_leq(a, a, endpoint));
      if (dominance_leq(a, b, endpoint) && dominance_leq(b, a, endpoint)) EXPECT_EQ(a, b);
      if (dominance_leq(a, b, endpoint) && dominance_leq(b, c, endpoint)) EXPECT_TRUE(dominance_leq(a, c, endpoint));
    }
    // Averaging towards the mean never increases prefix sums.
    std::vector<Rational> flat(n, a.sum() / Rational(static_cast<long>(n)));
    EXPECT_TRUE(dominance_leq(np(flat), a, true));
  }
}

TEST(SortDominant, IdempotentAndPermutationInvariant) {
  EXPECT_EQ(sort_dominant({q(0), q(1)}), np({q(1), q(0)}));
  EXPECT_EQ(sort_dominant({q(1, 2), q(1), q(1, 2)}), np({q(1), q(1, 2), q(1, 2)}));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const NewtonPoint a = random_point(rng, 6);
    const std::vector<Rational> entries(a.entries().begin(), a.entries().end());
    EXPECT_EQ(sort_dominant(entries), a);
    std::vector<Rational> shuffled = entries;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(sort_dominant(shuffled), a);
  }
}

TEST(HalfVector, Prefixes) {
  EXPECT_EQ(half_vector(np({q(1), q(1, 2), q(0)}), 1), np({q(1)}));
  EXPECT_EQ(half_vector(np({q(1, 2), q(1, 2)}), 1), np({q(1, 2)}));
  EXPECT_EQ(half_vector(np({q(1), q(0)}), 2), np({q(1), q(0)}));
  try {
    half_vector(np({q(1), q(0)}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
  }
}

TEST(ReducedFractions, DecreasingAndReduced) {
  const auto f = reduced_fractions(q(0), q(1), 3);
  const std::vector<Rational> expected{q(1), q(2, 3), q(1, 2), q(1, 3), q(0)};
  EXPECT_EQ(f, expected);
}

TEST(SlopeSelection, CountsPartitionsOfHeight) {
  // With candidates 1, 1/2, 0 and height 2: {1,1}? no (strict), so
  // {(1,2)}, {(1,1),(0,1)}, {(1/2,1)}, {(0,2)}.
  const std::vector<Rational> cand{q(1), q(1, 2), q(0)};
  int count = 0;
  for_each_slope_selection(cand, 2, [&](std::span<const SlopeBlock> blocks) {
    long h = 0;
    for (const auto& b : blocks) h += b.height();
    EXPECT_EQ(h, 2);
    ++count;
  });
  EXPECT_EQ(count, 4);
}

TEST(Hasse, ChainAndBranching) {
  const std::vector<NewtonPoint> chain{np({q(1), q(0), q(0)}), np({q(1, 2), q(1, 2), q(0)}),
                                       np({q(1, 3), q(1, 3), q(1, 3)})};
  const auto e = hasse_diagram(chain);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0], (CoverEdge{1, 0}));
  EXPECT_EQ(e[1], (CoverEdge{2, 1}));
  // (3/2,3/2,0,0) and (2,1/3,1/3,1/3) are incomparable, both just below (2,1,0,0).
  const std::vector<NewtonPoint> diamond{np({q(3), q(0), q(0), q(0)}), np({q(2), q(1), q(0), q(0)}),
                                         np({q(3, 2), q(3, 2), q(0), q(0)}), np({q(1), q(1), q(1), q(0)}),
                                         np({q(2), q(1, 3), q(1, 3), q(1, 3)})};
  const auto d = hasse_diagram(diamond);
  for (const auto& edge : d) EXPECT_TRUE(dominance_less(diamond[edge.upper], diamond[edge.lower], true));
  const std::vector<CoverEdge> expected{{1, 0}, {2, 1}, {3, 2}, {4, 1}};
  EXPECT_EQ(d, expected);
}

}  // namespace
}  // namespace isocrystal
