#include "kfaces/gtheorem.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kfaces;

namespace {

std::vector<Natural> nat(std::initializer_list<long long> xs) {
  std::vector<Natural> v;
  for (auto x : xs) v.push_back(x);
  return v;
}

GVector gv(std::initializer_list<long long> xs) { return GVector{nat(xs)}; }

/// Random M-sequence of length delta+1: g_1 uniform in [0, 40], then each
/// entry uniform below min(cap, 60) so values stay moderate.
GVector random_m_sequence(unsigned delta, std::mt19937_64& rng) {
  GVector g{{1}};
  for (unsigned s = 1; s <= delta; ++s) {
    Natural cap = 40;
    if (s >= 2) {
      cap = *max_next_entry(g[s - 1], s);
      if (cap > 60) cap = 60;
    }
    const auto hi = cap.convert_to<unsigned long long>();
    g.entries.push_back(Natural(rng() % (hi + 1)));
  }
  return g;
}

}  // namespace

TEST(Matrix, M10MatchesPrintedDisplay) {
  const std::vector<std::vector<long long>> printed = {
      {11, 55, 165, 330, 462, 462, 330, 165, 55, 11}, {9, 45, 120, 210, 252, 210, 120, 45, 10, 1},
      {7, 35, 84, 126, 126, 84, 36, 9, 1, 0},         {5, 25, 55, 70, 56, 28, 8, 1, 0, 0},
      {3, 15, 31, 34, 21, 7, 1, 0, 0, 0},             {1, 5, 10, 10, 5, 1, 0, 0, 0, 0}};
  const auto m = build_matrix(10);
  ASSERT_EQ(m.delta(), 5u);
  for (unsigned i = 0; i <= 5; ++i)
    for (unsigned k = 0; k < 10; ++k) EXPECT_EQ(m(i, k), printed[i][k]) << i << ' ' << k;
}

TEST(Matrix, SmallRowFromDefinition) {
  EXPECT_EQ(build_matrix(4).row(2), nat({1, 2, 1, 0}));
  EXPECT_THROW(build_matrix(0), std::invalid_argument);
}

TEST(Matrix, StructuralInvariants) {
  for (unsigned d = 1; d <= 64; ++d) {
    const auto m = build_matrix(d);
    for (unsigned i = 0; i <= m.delta(); ++i) {
      for (unsigned k = 0; k < d; ++k) ASSERT_GE(m(i, k), 0);
      if (i >= 1) {
        ASSERT_EQ(m(i, d - i), 1) << d << ' ' << i;
        for (unsigned k = d - i + 1; k < d; ++k) ASSERT_EQ(m(i, k), 0);
      }
      ASSERT_EQ(m(i, 0), Natural(d + 1 - 2 * i));
      if (i > 0) ASSERT_LT(m(i, 0), m(i - 1, 0));
    }
  }
}

TEST(GToF, Examples) {
  EXPECT_EQ(g_to_f(gv({1, 0, 0}), 4).counts, nat({5, 10, 10, 5}));
  const FVector f = g_to_f(gv({1, 1, 1}), 4);
  EXPECT_EQ(f.counts, nat({9, 18, 15, 6}));
  EXPECT_EQ(euler_sum(f), 0);
  EXPECT_EQ(g_to_f(gv({1}), 10).counts[6], 330);
  // short vectors are zero-padded
  EXPECT_EQ(g_to_f(gv({1, 1}), 4), g_to_f(gv({1, 1, 0}), 4));
}

TEST(GToF, RejectsNonMSequencesUnlessUnchecked) {
  EXPECT_THROW(g_to_f(gv({1, 1, 2}), 4), std::invalid_argument);
  EXPECT_THROW(g_to_f(gv({1, 0, 0, 0}), 4), std::invalid_argument);  // too long
  EXPECT_EQ(g_to_f_unchecked(gv({1, 1, 2}), build_matrix(4)).counts, nat({10, 20, 16, 6}));
}

TEST(FToG, Examples) {
  EXPECT_EQ(f_to_g(FVector{4, nat({9, 18, 15, 6})}), gv({1, 1, 1}));
  EXPECT_EQ(f_to_g(FVector{4, nat({5, 10, 10, 5})}), gv({1, 0, 0}));
  EXPECT_THROW(f_to_g(FVector{4, nat({7, 14, 12, 5})}), not_an_fvector);
  EXPECT_THROW(f_to_g(FVector{4, nat({5, 10, 10})}), std::invalid_argument);
}

TEST(FToG, RejectsNegativeAndInconsistentInput) {
  // (1,1,2) is not an M-sequence; its product must be rejected
  EXPECT_THROW(f_to_g(FVector{4, nat({10, 20, 16, 6})}), not_an_fvector);
  // facets fewer than d+1
  EXPECT_THROW(f_to_g(FVector{4, nat({5, 10, 10, 4})}), not_an_fvector);
  // perturbed f_0 breaks the full-column check
  EXPECT_THROW(f_to_g(FVector{4, nat({10, 18, 15, 6})}), not_an_fvector);
  // twice a simplex: g_0 = 2 is not allowed
  EXPECT_THROW(f_to_g(FVector{4, nat({10, 20, 20, 10})}), not_an_fvector);
}

TEST(IsSimpleFVector, Examples) {
  EXPECT_TRUE(is_simple_fvector(FVector{4, nat({5, 10, 10, 5})}));
  EXPECT_TRUE(is_simple_fvector(FVector{4, nat({9, 18, 15, 6})}));
  // 6 vertices is a (4,0)-gap: no M-sequence reaches f_0 = 6 at all
  const auto reach = oracle::realizable_set(4, 0, 6);
  ASSERT_EQ(reach.count(6), 0u);
  for (int a = 0; a <= 40; ++a)
    for (int b = 0; b <= 40; ++b)
      for (int c = 0; c <= 12; ++c) ASSERT_FALSE(is_simple_fvector(FVector{4, nat({6, a, b, c})}));
}

TEST(GTheorem, RoundTripRandomMSequences) {
  std::mt19937_64 rng(1234);
  for (unsigned d = 3; d <= 14; ++d) {
    const auto m = build_matrix(d);
    for (int t = 0; t < 200; ++t) {
      const GVector g = random_m_sequence(m.delta(), rng);
      ASSERT_TRUE(is_m_sequence(g));
      const FVector f = g_to_f(g, m);
      ASSERT_TRUE(satisfies_euler(f)) << d;
      ASSERT_EQ(f_to_g(f), g) << d;
    }
  }
}

TEST(GTheorem, LinearInEachEntry) {
  const auto m = build_matrix(9);
  const GVector base = gv({1, 6, 5, 4, 2});
  const FVector f0 = g_to_f(base, m);
  for (unsigned i = 1; i <= m.delta(); ++i) {
    GVector g = base;
    g[i] += 1;
    const FVector f1 = g_to_f_unchecked(g, m);
    for (unsigned k = 0; k < 9; ++k) EXPECT_EQ(f1.counts[k] - f0.counts[k], m(i, k));
  }
}
