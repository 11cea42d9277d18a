/**
 * @brief Macaulay binomial expansions, the shadow operators and M-sequences.
 *
 * Every n >= 1 has a unique expansion at level s
 *
 *     n = C(a_s, s) + C(a_{s-1}, s-1) + ... + C(a_i, i),  a_s > ... > a_i >= i >= 1,
 *
 * and the p-fold shadow maps each term C(a_j, j) to C(a_j - p, j - p).
 *
 * Binomial convention: C(x, 0) = 1 and C(x, m) = 0 for m < 0. With this
 * convention shadow(., s, 1) is the lower-shadow function of Macaulay's
 * theorem, and shadow(., s, p) equals p single-step shadows taken at levels
 * s, s-1, ..., s-p+1. (The other reading of the last term, C(a_i - 1, i),
 * is not used anywhere.)
 */
#pragma once

#include "kfaces/core_arith.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kfaces {

struct MacaulayTerm {
  std::uint64_t top;  // a_j
  unsigned level;     // j
  friend bool operator==(const MacaulayTerm&, const MacaulayTerm&) = default;
};

struct MacaulayExpansion {
  unsigned level = 0;  // s
  std::vector<MacaulayTerm> terms;  // levels strictly descending from s

  Natural value() const {
    Natural n = 0;
    for (const auto& t : terms) n += binomial(t.top, t.level);
    return n;
  }
};

/// An M-sequence candidate (g_0, g_1, ..., g_m).
struct GVector {
  std::vector<Natural> entries;

  std::size_t size() const { return entries.size(); }
  const Natural& operator[](std::size_t i) const { return entries[i]; }
  Natural& operator[](std::size_t i) { return entries[i]; }
  friend bool operator==(const GVector&, const GVector&) = default;
};

namespace detail {

/// Largest a with C(a, s) <= n, for n >= 1 and s >= 1.
inline std::uint64_t greedy_top(const Natural& n, unsigned s) {
  if (s == 1) {
    if (n > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("expand: value too large for a level-1 term");
    return n.convert_to<std::uint64_t>();
  }
  std::uint64_t lo = s;  // C(s, s) = 1 <= n
  std::uint64_t hi = 2 * static_cast<std::uint64_t>(s);
  while (binomial(hi, s) <= n) {
    lo = hi;
    hi *= 2;
  }
  // invariant: C(lo, s) <= n < C(hi, s)
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (binomial(mid, s) <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace detail

/// Greedy (hence the unique) Macaulay expansion of n >= 1 at level s >= 1.
inline MacaulayExpansion expand(Natural n, unsigned s) {
  if (s == 0) throw std::invalid_argument("expand: level must be >= 1");
  if (n < 1) throw std::invalid_argument("expand: n must be >= 1");
  MacaulayExpansion e;
  e.level = s;
  for (unsigned j = s; j >= 1 && n > 0; --j) {
    std::uint64_t a = detail::greedy_top(n, j);
    e.terms.push_back({a, j});
    n -= binomial(a, j);
  }
  return e;
}

namespace detail {

/// Macaulay pseudo-power: the largest m at level s+1 whose one-step shadow
/// is <= n, where n lives at level s >= 1.
inline Natural pseudo_power(const Natural& n, unsigned s) {
  if (n == 0) return 0;
  Natural m = 0;
  for (const auto& t : expand(n, s).terms) m += binomial(t.top + 1, t.level + 1);
  return m;
}

}  // namespace detail

/// The p-fold shadow of n at level s.
///
///   p = 0   identity
///   p > 0   sum of C(a_j - p, j - p) over the expansion of n at level s
///   p = -q  the greatest m (at level s) whose q-fold shadow equals n,
///           where n is read at level s - q
///
/// shadow(0, s, p) = 0. Throws if p > s, or if p < 0 and s + p < 1 with
/// n >= 1 (the preimage of a positive value at level 0 is unbounded).
inline Natural shadow(const Natural& n, unsigned s, int p) {
  if (n < 0) throw std::invalid_argument("shadow: n must be nonnegative");
  if (p > static_cast<int>(s))
    throw std::invalid_argument("shadow: p = " + std::to_string(p) + " exceeds level " +
                                std::to_string(s));
  if (p == 0 || n == 0) return n;
  if (p > 0) {
    Natural out = 0;
    for (const auto& t : expand(n, s).terms)
      out += binomial_ext(static_cast<std::int64_t>(t.top) - p,
                          static_cast<std::int64_t>(t.level) - p);
    return out;
  }
  const int q = -p;
  if (static_cast<int>(s) - q < 1)
    throw std::invalid_argument("shadow: inverse preimage is unbounded at level 0");
  Natural m = n;
  for (unsigned level = s - q; level < s; ++level) m = detail::pseudo_power(m, level);
  return m;
}

/// True iff g_0 = 1 and shadow(g_s, s, 1) <= g_{s-1} for all s >= 1.
inline bool is_m_sequence(const GVector& g) {
  if (g.size() == 0 || g[0] != 1) return false;
  for (std::size_t s = 1; s < g.size(); ++s) {
    if (g[s] < 0) return false;
    if (shadow(g[s], static_cast<unsigned>(s), 1) > g[s - 1]) return false;
  }
  return true;
}

/// Largest v with shadow(v, s, 1) <= prev. At s = 1 every v passes when
/// prev >= 1, reported as std::nullopt (unbounded).
inline std::optional<Natural> max_next_entry(const Natural& prev, unsigned s) {
  if (s == 0) throw std::invalid_argument("max_next_entry: level must be >= 1");
  if (prev <= 0) return Natural(0);
  if (s == 1) return std::nullopt;
  return detail::pseudo_power(prev, s - 1);
}

}  // namespace kfaces
