#include "kfaces/core_arith.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kfaces;

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 7), 0);
  EXPECT_EQ(binomial(11, 7), 330);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(7, 0), 1);
}

TEST(Binomial, CentralCoefficientIsExact) {
  // C(120,60) = 120! / (60!)^2
  Natural f = 1;
  for (int i = 1; i <= 120; ++i) f *= i;
  Natural h = 1;
  for (int i = 1; i <= 60; ++i) h *= i;
  EXPECT_EQ(binomial(120, 60), f / (h * h));
  EXPECT_EQ(binomial(120, 60).str(), "96614908840363322603893139521372656");
}

TEST(Binomial, PascalRecurrence) {
  for (std::uint64_t n = 1; n <= 64; ++n)
    for (std::uint64_t k = 1; k <= 64; ++k)
      EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << ' ' << k;
}

TEST(Binomial, ExtendedArguments) {
  EXPECT_EQ(binomial_ext(4, 0), 1);
  EXPECT_EQ(binomial_ext(0, 0), 1);
  EXPECT_EQ(binomial_ext(3, -1), 0);
  EXPECT_EQ(binomial_ext(-2, 1), 0);
  EXPECT_EQ(binomial_ext(2, 3), 0);
}

TEST(Valuation, Examples) {
  EXPECT_EQ(valuation(2, 108), 2u);
  EXPECT_EQ(valuation(3, 108), 3u);
  EXPECT_EQ(valuation(5, 108), 0u);
  EXPECT_EQ(valuation(2, -8), 3u);
}

TEST(Valuation, RejectsZeroAndComposite) {
  EXPECT_THROW(valuation(2, 0), std::invalid_argument);
  EXPECT_THROW(valuation(4, 12), std::invalid_argument);
  EXPECT_THROW(valuation(1, 12), std::invalid_argument);
}

TEST(Valuation, MultiplicativeAndUltrametric) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::int64_t> dist(1, 1'000'000);
  for (std::uint64_t p : {2, 3, 5, 7, 31}) {
    for (int t = 0; t < 500; ++t) {
      const Integer a = dist(rng), b = dist(rng);
      EXPECT_EQ(valuation(p, a * b), valuation(p, a) + valuation(p, b));
      if (valuation(p, a) < valuation(p, b) && a + b != 0)
        EXPECT_EQ(valuation(p, a + b), valuation(p, a));
    }
  }
}

TEST(Primes, UpTo) {
  EXPECT_EQ(primes_up_to(10), (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_TRUE(primes_up_to(1).empty());
  EXPECT_TRUE(primes_up_to(0).empty());
  EXPECT_EQ(primes_up_to(4), (std::vector<std::uint64_t>{2, 3}));
  EXPECT_EQ(primes_up_to(31).size(), 11u);
}

TEST(Primes, PowerExponent) {
  EXPECT_EQ(prime_power_exponent(2, 10), 3u);
  EXPECT_EQ(prime_power_exponent(3, 10), 2u);
  EXPECT_EQ(prime_power_exponent(7, 10), 1u);
  EXPECT_EQ(prime_power_exponent(11, 10), 0u);
  EXPECT_EQ(prime_power_exponent(2, 1), 0u);
  EXPECT_EQ(prime_power_exponent(2, 8), 3u);
  EXPECT_THROW(prime_power_exponent(2, 0), std::invalid_argument);
}

TEST(IntegerRoots, FloorAndCeiling) {
  EXPECT_EQ(isqrt(Natural(15)), 3);
  EXPECT_EQ(isqrt(Natural(16)), 4);
  EXPECT_EQ(isqrt_ceil(Natural(16)), 4);
  EXPECT_EQ(isqrt_ceil(Natural(17)), 5);
  EXPECT_EQ(isqrt_ceil(Natural(0)), 0);
  const Natural big = Natural(1) << 200;
  EXPECT_EQ(isqrt(big), Natural(1) << 100);
  EXPECT_EQ(isqrt_ceil(big + 1), (Natural(1) << 100) + 1);
}
