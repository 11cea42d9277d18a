#include "kfaces/pascal_mod.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace kfaces;

#ifndef KFACES_TEST_DATA
#error "KFACES_TEST_DATA must point at tests/data"
#endif

TEST(BinomMod, Examples) {
  EXPECT_EQ(binom_mod(8, 4, 4), 2);
  EXPECT_EQ(binom_mod(4, 2, 4), 2);
  for (unsigned n = 0; n < 20; ++n) EXPECT_EQ(binom_mod(n, 0, 7), 1);
  EXPECT_THROW(binom_mod(3, 1, 1), std::invalid_argument);
}

TEST(BinomMod, PrintedTriangleMod4) {
  std::ifstream in(std::string(KFACES_TEST_DATA) + "/pascal_mod4.txt");
  ASSERT_TRUE(in);
  std::string line;
  unsigned n = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    unsigned v, k = 0;
    while (row >> v) {
      ASSERT_EQ(binom_mod(n, k, 4), v) << "row " << n << " col " << k;
      ++k;
    }
    ASSERT_EQ(k, n + 1);
    ++n;
  }
  EXPECT_EQ(n, 29u);
}

TEST(PeriodSpec, Exponent) {
  EXPECT_EQ(PeriodSpec::make(2, 2, 2).e, 1u);
  EXPECT_EQ(PeriodSpec::make(2, 3, 1).e, 2u);
  EXPECT_EQ(PeriodSpec::make(2, 2, 2).period(), 8u);
  EXPECT_EQ(PeriodSpec::make(2, 2, 2).modulus(), 4);
  EXPECT_THROW(PeriodSpec::make(4, 2, 1), std::invalid_argument);
  EXPECT_THROW(PeriodSpec::make(3, 2, 0), std::invalid_argument);
}

TEST(Periodicity, Examples) {
  EXPECT_TRUE(check_periodicity(PeriodSpec::make(2, 2, 2), 64));
  EXPECT_TRUE(check_periodicity(PeriodSpec::make(3, 2, 1), 81));
  EXPECT_FALSE(check_period(PeriodSpec::make(2, 2, 2), 7, 64));
  EXPECT_THROW(check_periodicity(PeriodSpec::make(2, 2, 2), 7), std::invalid_argument);
}

TEST(Periodicity, SmallerPeriodFailsOnGrid) {
  // p^(e+r-1) is never a period: the zero run at p^(e+r) is unique
  for (std::uint64_t p : {2, 3, 5})
    for (unsigned k = 0; k <= 10; ++k)
      for (unsigned r = 1; r <= 2; ++r) {
        const auto s = PeriodSpec::make(p, k, r);
        EXPECT_FALSE(check_period(s, s.period() / p, 2 * s.period())) << p << ' ' << k << ' ' << r;
      }
}

TEST(Reflection, Examples) {
  EXPECT_TRUE(check_reflection(PeriodSpec::make(2, 3, 1)));
  EXPECT_TRUE(check_reflection(PeriodSpec::make(2, 2, 2)));
  EXPECT_TRUE(check_reflection(PeriodSpec::make(5, 4, 1)));
}

TEST(ZeroRun, Examples) {
  auto z = longest_zero_run(PeriodSpec::make(2, 2, 2));
  EXPECT_EQ(z.start, 8u);
  EXPECT_EQ(z.length, 3u);
  EXPECT_TRUE(z.unique);
  z = longest_zero_run(PeriodSpec::make(3, 1, 1));
  EXPECT_EQ(z.start, 3u);
  EXPECT_EQ(z.length, 2u);
  EXPECT_TRUE(z.unique);
  z = longest_zero_run(PeriodSpec::make(2, 0, 1));
  EXPECT_EQ(z.start, 2u);
  EXPECT_EQ(z.length, 1u);
  EXPECT_TRUE(z.unique);
}

TEST(PrimePowerGrid, AllChecks) {
  for (std::uint64_t p : {2, 3, 5})
    for (unsigned k = 0; k <= 10; ++k)
      for (unsigned r = 1; r <= 2; ++r) {
        const auto s = PeriodSpec::make(p, k, r);
        EXPECT_TRUE(check_periodicity(s, 2 * s.period())) << p << ' ' << k << ' ' << r;
        EXPECT_TRUE(check_reflection(s)) << p << ' ' << k << ' ' << r;
        const auto z = longest_zero_run(s);
        EXPECT_EQ(z.start, s.period());
        EXPECT_EQ(z.length, k + 1);
        EXPECT_TRUE(z.unique);
      }
}

TEST(ValuationBound, Examples) {
  EXPECT_TRUE(valuation_bound_check(2, 7));
  EXPECT_TRUE(valuation_bound_check(3, 8));
  EXPECT_TRUE(valuation_bound_check(7, 0));
  EXPECT_EQ(valuation(2, Natural(8 * 35)), 3u);
}

TEST(ValuationBound, Sweep) {
  for (auto p : primes_up_to(31))
    for (unsigned k = 0; k <= 200; ++k) ASSERT_TRUE(valuation_bound_check(p, k)) << p << ' ' << k;
}
