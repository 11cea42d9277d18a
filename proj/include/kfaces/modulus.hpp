/**
 * @brief The modulus G(d,k): the gcd of column k of M_d below the top row.
 *
 * Computed two independent ways (the defining gcd and the closed form over
 * prime powers <= k+1) plus a small-coefficient integer combination
 * G = sum lambda_i m(i,k) used by the gap certificate.
 */
#pragma once

#include "kfaces/core_arith.hpp"
#include "kfaces/gtheorem.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kfaces {

struct ModulusResult {
  unsigned d = 0;
  unsigned k = 0;
  Natural g_gcd;
  Natural g_formula;
  bool agree = false;
};

/// Integer coefficients with sum lambda_i m(i,k) = G(d,k), i = 1..delta.
struct LambdaRepr {
  std::vector<Integer> lambdas;  // lambdas[i-1] is the coefficient of row i
  Natural max_abs;

  const Integer& at_row(unsigned i) const { return lambdas.at(i - 1); }
};

namespace detail {

inline void check_dk(unsigned d, unsigned k, const char* who) {
  if (d < 2) throw std::invalid_argument(std::string(who) + ": d must be >= 2");
  if (k >= d)
    throw std::invalid_argument(std::string(who) + ": need 0 <= k < d, got d=" + std::to_string(d) +
                                " k=" + std::to_string(k));
}

}  // namespace detail

inline Natural modulus_gcd(const MdMatrix& m, unsigned k) {
  detail::check_dk(m.d(), k, "modulus_gcd");
  Natural g = 0;
  for (unsigned i = 1; i <= m.delta(); ++i) g = gcd(g, m(i, k));
  return g;
}

inline Natural modulus_gcd(unsigned d, unsigned k) {
  detail::check_dk(d, k, "modulus_gcd");
  return modulus_gcd(MdMatrix(d), k);
}

/// Closed form:
///   k >= floor((d+1)/2):  1
///   k even:  2 if 2^(e+1) | d-k+1 (2^e <= k+1 < 2^(e+1)), else 1
///   k odd:   (d-k+1) / gcd(d-k+1, prod p^e_p) over primes p <= k+1,
///            p^e_p <= k+1 < p^(e_p+1)
inline Natural modulus_formula(unsigned d, unsigned k) {
  detail::check_dk(d, k, "modulus_formula");
  if (k >= (d + 1) / 2) return 1;
  const Natural top = d - k + 1;
  if (k % 2 == 0) {
    const unsigned e = prime_power_exponent(2, k + 1);
    return top % ipow(2, e + 1) == 0 ? 2 : 1;
  }
  Natural prod = 1;
  for (auto p : primes_up_to(k + 1)) prod *= ipow(p, prime_power_exponent(p, k + 1));
  return top / gcd(top, prod);
}

inline ModulusResult modulus(unsigned d, unsigned k) {
  ModulusResult r{d, k, modulus_gcd(d, k), modulus_formula(d, k), false};
  r.agree = r.g_gcd == r.g_formula;
  return r;
}

namespace detail {

struct ExtGcd {
  Integer g, x, y;  // g = a*x + b*y
};

inline ExtGcd ext_gcd(Integer a, Integer b) {
  Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Integer q = a / b;
    Integer t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

constexpr long kLambdaIterationCap = 1'000'000;

}  // namespace detail

/// Chained extended gcd over the nonzero entries of column k (rows
/// 1..delta), then the exchange step
///   lambda_s -= m(t,k), lambda_t += m(s,k)     (lambda_s >= m(1,k), lambda_t < 0)
/// and its mirror image, until every |lambda_i| < m(1,k). Runs of the same
/// exchange are applied in one batch; the iteration cap counts batches.
///
/// For d = 2 the column has a single entry equal to m(1,0) = G = 1, so the
/// bound cannot be met and lambda = (1) is returned as is.
inline LambdaRepr lambda_reduce(const MdMatrix& m, unsigned k) {
  detail::check_dk(m.d(), k, "lambda_reduce");
  if (k + 2 > m.d()) throw std::invalid_argument("lambda_reduce: need k <= d-2");
  const unsigned delta = m.delta();
  std::vector<Integer> lam(delta, Integer(0));
  Integer g = 0;
  for (unsigned i = 1; i <= delta; ++i) {
    const Natural& w = m(i, k);
    if (w == 0) continue;
    if (g == 0) {
      g = w;
      lam[i - 1] = 1;
      continue;
    }
    auto eg = detail::ext_gcd(g, w);
    for (auto& l : lam) l *= eg.x;
    lam[i - 1] = eg.y;
    g = eg.g;
  }

  const Natural& m1 = m(1, k);
  for (long iter = 0;; ++iter) {
    if (iter >= detail::kLambdaIterationCap)
      throw std::runtime_error("lambda_reduce: iteration cap reached for d=" +
                               std::to_string(m.d()) + " k=" + std::to_string(k));
    unsigned s = 0;
    for (unsigned i = 1; i <= delta && s == 0; ++i)
      if (m(i, k) != 0 && abs(lam[i - 1]) >= m1) s = i;
    if (s == 0) break;
    const int sign = lam[s - 1] > 0 ? 1 : -1;
    unsigned t = 0;
    for (unsigned i = 1; i <= delta && t == 0; ++i)
      if (m(i, k) != 0 && lam[i - 1] * sign < 0) t = i;
    if (t == 0) break;  // single usable row (d = 2)
    // q repetitions of the step, each taken while its preconditions still hold
    const Integer from_s = (abs(lam[s - 1]) - m1) / m(t, k) + 1;
    const Integer from_t = (abs(lam[t - 1]) + m(s, k) - 1) / m(s, k);
    const Integer q = from_s < from_t ? from_s : from_t;
    lam[s - 1] -= sign * q * m(t, k);
    lam[t - 1] += sign * q * m(s, k);
  }

  LambdaRepr out{std::move(lam), 0};
  for (const auto& l : out.lambdas)
    if (abs(l) > out.max_abs) out.max_abs = abs(l);
  return out;
}

inline LambdaRepr lambda_reduce(unsigned d, unsigned k) { return lambda_reduce(MdMatrix(d), k); }

/// sum lambda_i m(i,k).
inline Integer lambda_value(const LambdaRepr& r, const MdMatrix& m, unsigned k) {
  Integer s = 0;
  for (unsigned i = 1; i <= m.delta(); ++i) s += r.at_row(i) * m(i, k);
  return s;
}

}  // namespace kfaces
