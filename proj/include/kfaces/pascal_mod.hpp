/**
 * @brief Binomial coefficients modulo prime powers: periodicity, reflection
 * and zero runs of C(d, k+1) mod p^r as d varies, plus the valuation bound
 * v_p((k+1) C(k,j)) <= e.
 *
 * All checks evaluate exact binomials and reduce; no Lucas/Kummer shortcuts.
 */
#pragma once

#include "kfaces/core_arith.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kfaces {

/// A prime p, a column index k and an exponent r >= 1, with e determined by
/// p^e <= k+1 < p^(e+1).
struct PeriodSpec {
  std::uint64_t p = 2;
  unsigned k = 0;
  unsigned r = 1;
  unsigned e = 0;

  static PeriodSpec make(std::uint64_t p, unsigned k, unsigned r) {
    if (!is_prime(p)) throw std::invalid_argument("PeriodSpec: " + std::to_string(p) + " is not prime");
    if (r == 0) throw std::invalid_argument("PeriodSpec: r must be >= 1");
    return {p, k, r, prime_power_exponent(p, k + 1)};
  }

  Natural modulus() const { return ipow(p, r); }     // p^r
  std::uint64_t period() const { return ipow(p, e + r).convert_to<std::uint64_t>(); }  // p^(e+r)
};

/// C(n, k) mod m, from the exact value.
inline Natural binom_mod(std::uint64_t n, std::uint64_t k, const Natural& m) {
  if (m < 2) throw std::invalid_argument("binom_mod: modulus must be >= 2");
  return binomial(n, k) % m;
}

/// True iff C(d, k+1) = C(d', k+1) mod p^r whenever d = d' mod `period`,
/// for all d, d' <= span.
inline bool check_period(const PeriodSpec& spec, std::uint64_t period, std::uint64_t span) {
  if (period == 0) throw std::invalid_argument("check_period: period must be >= 1");
  const Natural mod = spec.modulus();
  for (std::uint64_t base = 0; base < period && base <= span; ++base) {
    const Natural ref = binom_mod(base, spec.k + 1, mod);
    for (std::uint64_t d = base + period; d <= span; d += period)
      if (binom_mod(d, spec.k + 1, mod) != ref) return false;
  }
  return true;
}

/// check_period with the period p^(e+r).
inline bool check_periodicity(const PeriodSpec& spec, std::uint64_t span) {
  if (span < spec.period())
    throw std::invalid_argument("check_periodicity: span must be >= p^(e+r)");
  return check_period(spec, spec.period(), span);
}

/// C(p^(e+r) + k - i, k+1) = (-1)^(k+1) C(i, k+1) mod p^r for i = 0..p^(e+r)+k.
inline bool check_reflection(const PeriodSpec& spec) {
  const Natural mod = spec.modulus();
  const std::uint64_t P = spec.period();
  for (std::uint64_t i = 0; i <= P + spec.k; ++i) {
    const Natural lhs = binom_mod(P + spec.k - i, spec.k + 1, mod);
    Natural rhs = binom_mod(i, spec.k + 1, mod);
    if (spec.k % 2 == 0 && rhs != 0) rhs = mod - rhs;  // odd k+1: negate, canonical residue
    if (lhs != rhs) return false;
  }
  return true;
}

struct ZeroRun {
  std::uint64_t start = 0;
  std::uint64_t length = 0;
  bool unique = false;
};

/// Longest maximal run of d with C(d, k+1) = 0 mod p^r, over one period
/// d in [k+1, k+1+p^(e+r)).
inline ZeroRun longest_zero_run(const PeriodSpec& spec) {
  const Natural mod = spec.modulus();
  const std::uint64_t lo = spec.k + 1;
  const std::uint64_t hi = lo + spec.period();
  ZeroRun best;
  unsigned ties = 0;
  std::uint64_t run_start = 0, run_len = 0;
  auto close_run = [&] {
    if (run_len == 0) return;
    if (run_len > best.length) {
      best = {run_start, run_len, false};
      ties = 1;
    } else if (run_len == best.length) {
      ++ties;
    }
    run_len = 0;
  };
  for (std::uint64_t d = lo; d < hi; ++d) {
    if (binom_mod(d, spec.k + 1, mod) == 0) {
      if (run_len == 0) run_start = d;
      ++run_len;
    } else {
      close_run();
    }
  }
  close_run();
  best.unique = ties == 1;
  return best;
}

/// v_p((k+1) C(k,j)) <= e for every 0 <= j <= k, where p^e <= k+1 < p^(e+1).
inline bool valuation_bound_check(std::uint64_t p, unsigned k) {
  const unsigned e = prime_power_exponent(p, k + 1);
  for (unsigned j = 0; j <= k; ++j)
    if (valuation(p, Natural(k + 1) * binomial(k, j)) > e) return false;
  return true;
}

}  // namespace kfaces
