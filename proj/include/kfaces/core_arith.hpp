/**
 * @brief Exact integer primitives: binomial coefficients, p-adic valuations
 * and small prime lists.
 *
 * Every quantity in the library (dimensions excepted) is a Natural, an
 * arbitrary-precision integer. Nothing here touches floating point.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kfaces {

/// Arbitrary-precision integer. Used for nonnegative quantities
/// (face counts, binomials, g-entries) and for signed coefficients alike.
using Natural = boost::multiprecision::cpp_int;
using Integer = boost::multiprecision::cpp_int;

/// C(n, k), exact. Zero when k > n.
inline Natural binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Natural r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Binomial with a possibly negative upper or lower argument, as the
/// Macaulay operators need it: C(x, 0) = 1 for x >= 0, C(x, m) = 0 for
/// m < 0 or x < m.
inline Natural binomial_ext(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

/// Largest s with p^s | n.
inline unsigned valuation(std::uint64_t p, Integer n) {
  if (!is_prime(p))
    throw std::invalid_argument("valuation: " + std::to_string(p) + " is not prime");
  if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
  if (n < 0) n = -n;
  unsigned s = 0;
  while (n % p == 0) {
    n /= p;
    ++s;
  }
  return s;
}

/// Sorted primes <= m (sieve).
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  if (m < 2) return out;
  std::vector<bool> composite(m + 1, false);
  for (std::uint64_t i = 2; i <= m; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= m; j += i) composite[j] = true;
  }
  return out;
}

/// The unique e >= 0 with p^e <= m < p^(e+1).
inline unsigned prime_power_exponent(std::uint64_t p, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("prime_power_exponent: m must be >= 1");
  if (!is_prime(p))
    throw std::invalid_argument("prime_power_exponent: " + std::to_string(p) + " is not prime");
  unsigned e = 0;
  Natural pe = p;
  while (pe <= m) {
    pe *= p;
    ++e;
  }
  return e;
}

inline Natural ipow(std::uint64_t base, unsigned exp) {
  Natural r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

inline Natural gcd(Natural a, Natural b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Natural t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

/// Floor of the square root, exact.
inline Natural isqrt(const Natural& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  return boost::multiprecision::sqrt(n);
}

/// Ceiling of the square root, exact.
inline Natural isqrt_ceil(const Natural& n) {
  Natural r = isqrt(n);
  return r * r == n ? r : r + 1;
}

/// Ceiling division for a >= 0, b > 0.
inline Natural ceil_div(const Natural& a, const Natural& b) { return (a + b - 1) / b; }

inline std::string to_string(const Natural& n) { return n.str(); }

}  // namespace kfaces
