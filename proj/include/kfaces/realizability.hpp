/**
 * @brief (d,k)-realizability: which n occur as the number of k-faces of a
 * simple d-polytope.
 *
 * By the g-theorem, n is (d,k)-realizable iff some M-sequence g of length
 * delta+1 has sum g_i m(i,k) = n. Everything below is built on that
 * equivalence: a pruned depth-first search for witnesses, gap enumeration
 * up to a proven horizon, the two explicit constructions that bound the
 * largest gap, and the closed-form bounds.
 */
#pragma once

#include "kfaces/core_arith.hpp"
#include "kfaces/gtheorem.hpp"
#include "kfaces/macaulay.hpp"
#include "kfaces/modulus.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace kfaces {

/// Witness search for one (d,k). Stateless between queries, so one instance
/// can answer many n; not safe to share across threads.
class Realizer {
 public:
  Realizer(unsigned d, unsigned k) : m_(d), k_(k) {
    detail::check_dk(d, k, "is_realizable");
    weights_ = m_.column(k);
    last_ = 0;
    for (unsigned i = 1; i <= m_.delta(); ++i)
      if (weights_[i] != 0) last_ = i;
    // suffix_gcd_[i] = gcd(w_i, ..., w_last); zero past the last level
    suffix_gcd_.assign(m_.delta() + 2, Natural(0));
    for (unsigned i = last_; i >= 1; --i) suffix_gcd_[i] = gcd(suffix_gcd_[i + 1], weights_[i]);
  }

  const MdMatrix& matrix() const { return m_; }
  unsigned d() const { return m_.d(); }
  unsigned k() const { return k_; }
  const std::vector<Natural>& weights() const { return weights_; }

  /// An M-sequence g (length delta+1) with f_k(g) = n, if one exists.
  std::optional<GVector> find(const Natural& n) const {
    if (n < weights_[0]) return std::nullopt;
    GVector g{std::vector<Natural>(m_.delta() + 1, Natural(0))};
    g[0] = 1;
    if (search(1, n - weights_[0], g)) return g;
    return std::nullopt;
  }

 private:
  // Levels with weight 0 (i > d-k) never help, so the search stops at last_.
  bool search(unsigned i, const Natural& residual, GVector& g) const {
    if (residual == 0) return true;
    if (i > last_) return false;
    if (residual % suffix_gcd_[i] != 0) return false;
    Natural cap = residual / weights_[i];
    if (i >= 2) {
      const auto bound = max_next_entry(g[i - 1], i);
      if (bound && *bound < cap) cap = *bound;
      if (!reachable(i, g[i - 1], residual)) return false;
    }
    // Largest weights first: descending values reach big targets fastest.
    for (Natural v = cap;; --v) {
      g[i] = v;
      if (search(i + 1, residual - v * weights_[i], g)) return true;
      if (v == 0) break;
    }
    g[i] = 0;
    return false;
  }

  // Upper bound on sum_{j>=i} g_j w_j given g_{i-1} = prev, following the
  // largest admissible chain; false when even that falls short.
  bool reachable(unsigned i, Natural prev, const Natural& residual) const {
    Natural total = 0;
    for (unsigned j = i; j <= last_; ++j) {
      const auto c = max_next_entry(prev, j);
      if (!c) return true;
      if (*c == 0) break;
      total += *c * weights_[j];
      if (total >= residual) return true;
      prev = *c;
    }
    return total >= residual;
  }

  MdMatrix m_;
  unsigned k_;
  std::vector<Natural> weights_;
  std::vector<Natural> suffix_gcd_;
  unsigned last_ = 0;
};

inline std::optional<GVector> realizable_witness(unsigned d, unsigned k, const Natural& n) {
  return Realizer(d, k).find(n);
}

inline bool is_realizable(unsigned d, unsigned k, const Natural& n) {
  return realizable_witness(d, k, n).has_value();
}

/// f_k of a g-vector: sum g_i m(i,k), g zero-padded.
inline Natural fk_value(const GVector& g, const MdMatrix& m, unsigned k) {
  Natural s = 0;
  for (unsigned i = 0; i < g.size() && i <= m.delta(); ++i) s += g[i] * m(i, k);
  return s;
}

// ---------------------------------------------------------------------------
// Gap certificate

struct Certificate {
  unsigned d = 0;
  unsigned k = 0;
  LambdaRepr lambdas;
  Natural modulus;  // G(d,k)
  Natural c;        // m(1,k) / G
  GVector g_base;   // (1, g_1, ..., g_delta)
  Natural n_start;  // every G-multiple >= n_start is realizable
  bool validated = false;
};

/// g^(p,q) = (1, g_1 + p*lambda_1 + q, g_2 + p*lambda_2, ..., g_delta + p*lambda_delta).
inline GVector certificate_member(const Certificate& cert, const Natural& p, const Natural& q) {
  GVector g = cert.g_base;
  for (unsigned i = 1; i < g.size(); ++i) g[i] += p * cert.lambdas.at_row(i);
  if (g.size() > 1) g[1] += q;
  return g;
}

namespace detail {

inline bool nonneg_weakly_decreasing_tail(const GVector& g) {
  for (unsigned i = 1; i < g.size(); ++i) {
    if (g[i] < 0) return false;
    if (i >= 2 && g[i] > g[i - 1]) return false;
  }
  return true;
}

}  // namespace detail

/// Checks every g^(p,q) for 0 <= p < C and q in `qs`: nonnegative, weakly
/// decreasing after g_0, an M-sequence, and f_k = n_start + qCG + pG.
inline bool validate_certificate(const Certificate& cert, const MdMatrix& m,
                                 const std::vector<unsigned>& qs = {0, 1, 2}) {
  for (Natural p = 0; p < cert.c; ++p) {
    for (unsigned q : qs) {
      const GVector g = certificate_member(cert, p, q);
      if (!detail::nonneg_weakly_decreasing_tail(g) || !is_m_sequence(g)) return false;
      if (fk_value(g, m, cert.k) != cert.n_start + q * cert.c * cert.modulus + p * cert.modulus)
        return false;
    }
  }
  return true;
}

inline Certificate certificate(const MdMatrix& m, unsigned k) {
  const unsigned d = m.d();
  detail::check_dk(d, k, "certificate");
  if (k + 2 > d) throw std::invalid_argument("certificate: need k <= d-2");
  Certificate cert;
  cert.d = d;
  cert.k = k;
  cert.lambdas = lambda_reduce(m, k);
  cert.modulus = modulus_gcd(m, k);
  cert.c = m(1, k) / cert.modulus;

  const unsigned delta = m.delta();
  const Natural cm1 = cert.c - 1;
  std::vector<Natural> g(delta + 1, Natural(0));
  const Integer& last = cert.lambdas.at_row(delta);
  g[delta] = last < 0 ? Natural(cm1 * abs(last)) : Natural(0);
  for (unsigned i = delta - 1; i >= 1; --i)
    g[i] = g[i + 1] + cm1 * (abs(cert.lambdas.at_row(i)) + abs(cert.lambdas.at_row(i + 1)));
  g[0] = 1;
  cert.g_base = GVector{std::move(g)};
  cert.n_start = fk_value(cert.g_base, m, k);

  cert.validated = validate_certificate(cert, m);
  if (!cert.validated)
    throw std::logic_error("certificate: validation failed for d=" + std::to_string(d) +
                           " k=" + std::to_string(k));
  return cert;
}

inline Certificate certificate(unsigned d, unsigned k) { return certificate(MdMatrix(d), k); }

// ---------------------------------------------------------------------------
// Construction for k >= floor((d+1)/2)

struct LargeKConstruction {
  GVector g;  // (g_0, ..., g_{d-k})
  Natural n;  // no gaps >= n
};

/// Downward recursion: g_{d-k} = 0, and for i = d-k..1, x_i is the least
/// x >= g_i with
///     sum_{s=i}^{d-k} (shadow(x, s, i-s) - g_s) m(s,k) >= m(i-1,k) - 1,
/// then g_{i-1} = shadow(x_i, i, 1). For s > i, shadow(x, s, i-s) is the
/// largest level-s value whose (s-i)-fold shadow is x.
inline LargeKConstruction construct_g_large_k(const MdMatrix& m, unsigned k) {
  const unsigned d = m.d();
  detail::check_dk(d, k, "construct_g_large_k");
  if (k < (d + 1) / 2)
    throw std::invalid_argument("construct_g_large_k: need k >= floor((d+1)/2)");
  const unsigned top = d - k;
  std::vector<Natural> g(top + 1, Natural(0));
  for (unsigned i = top; i >= 1; --i) {
    const Natural need = m(i - 1, k) - 1;
    auto gain = [&](const Natural& x) {
      Integer total = 0;
      for (unsigned s = i; s <= top; ++s)
        total += (shadow(x, s, static_cast<int>(i) - static_cast<int>(s)) - g[s]) * m(s, k);
      return total;
    };
    Natural x = g[i];
    while (gain(x) < need) ++x;
    g[i - 1] = shadow(x, i, 1);
  }
  LargeKConstruction out{GVector{std::move(g)}, 0};
  out.n = fk_value(out.g, m, k);
  return out;
}

inline LargeKConstruction construct_g_large_k(unsigned d, unsigned k) {
  return construct_g_large_k(MdMatrix(d), k);
}

// ---------------------------------------------------------------------------
// Closed-form bounds

struct Bounds {
  Natural cubic_bound;                    // N(d,k) < ceil(d^2 C(d,k+1)^3 / 2)
  std::optional<Natural> large_k_bound;   // k >= floor((d+1)/2): ceil(C(d+1,d-k)(d-k)(k+1)(d+1)/2)
  std::optional<Natural> trivial_gap;  // k < d-1: C(d+1,k+1)+1 is never realizable
};

inline Bounds bounds(unsigned d, unsigned k) {
  detail::check_dk(d, k, "bounds");
  Bounds b;
  const Natural c = binomial(d, k + 1);
  b.cubic_bound = ceil_div(Natural(d) * d * c * c * c, 2);
  if (k >= (d + 1) / 2)
    b.large_k_bound = ceil_div(binomial(d + 1, d - k) * (d - k) * (k + 1) * (d + 1), 2);
  if (k + 1 < d) b.trivial_gap = binomial(d + 1, k + 1) + 1;
  return b;
}

/// Vertex-count values for dimension d (k = 0).
struct VertexBounds {
  unsigned d = 0;
  bool odd = false;
  /// Claimed non-realizable value; absent for d = 2.
  std::optional<Natural> gap_value;
  /// Certified ceiling of the analytic threshold above which every
  /// (even, for odd d) n is realizable.
  Natural upper;
  /// Least integer certified to be strictly above the analytic threshold.
  Natural first_above;
};

namespace detail {

// Scaled fixed-point with 2^64 fractional bits; every square root is rounded
// up, so the result is an upper bound on the exact value.
inline Natural vertex_threshold_scaled_upper(unsigned d, bool odd, const Natural& scale) {
  const Natural sq2d = isqrt_ceil(Natural(2 * d) * scale * scale);  // >= sqrt(2d) * scale
  const Natural lead = odd ? isqrt_ceil(Natural(d) * scale * scale) : sq2d;
  const Natural nested = isqrt_ceil(2 * sq2d * scale);  // >= sqrt(2 sqrt(2d)) * scale
  return Natural(d - 1) * (lead + 2 * nested + 5 * scale);
}

}  // namespace detail

inline VertexBounds vertex_case(unsigned d) {
  if (d < 2) throw std::invalid_argument("vertex_case: d must be >= 2");
  VertexBounds v;
  v.d = d;
  v.odd = d % 2 == 1;
  const Integer root = v.odd ? Integer(isqrt_ceil(Natural(d - 2))) : Integer(isqrt_ceil(Natural(2 * d - 4)));
  if (v.odd || d >= 4) v.gap_value = Integer(d - 1) * (root - 2) + 4;
  const Natural scale = Natural(1) << 64;
  const Natural hi = detail::vertex_threshold_scaled_upper(d, v.odd, scale);
  v.upper = ceil_div(hi, scale);
  v.first_above = hi / scale + 1;
  return v;
}

// ---------------------------------------------------------------------------
// Gap enumeration

struct GapOptions {
  std::optional<Natural> horizon_override;
  /// Sweep every multiple up to the horizon instead of stopping once C
  /// consecutive multiples are realizable.
  bool exhaustive = false;
  unsigned jobs = 1;
};

struct GapReport {
  unsigned d = 0;
  unsigned k = 0;
  Natural modulus;
  Natural simplex_count;  // m(0,k); fewer k-faces are impossible
  Natural proven_horizon;
  std::string horizon_source;
  Natural horizon;        // the horizon actually used
  bool horizon_overridden = false;
  std::vector<Natural> gaps;
  Natural n_exact;        // largest gap >= m(0,k), 0 if none
  Natural threshold;      // max(n_exact, m(0,k) - G): every G-multiple above it is realizable
  Natural swept_to;       // last multiple decided by search
  bool closed_by_window = false;
  bool exact = false;
};

namespace detail {

struct ProvenHorizon {
  Natural value;
  std::string source;
};

inline ProvenHorizon proven_horizon(const MdMatrix& m, unsigned k) {
  const unsigned d = m.d();
  const Bounds b = bounds(d, k);
  ProvenHorizon h{b.cubic_bound, "cubic_bound"};
  auto consider = [&](const Natural& v, const char* name) {
    if (v < h.value) h = {v, name};
  };
  if (b.large_k_bound) consider(*b.large_k_bound, "large_k_bound");
  if (k + 2 <= d) consider(certificate(m, k).n_start, "certificate");
  if (k >= (d + 1) / 2) consider(construct_g_large_k(m, k).n, "large_k_construction");
  return h;
}

// Decides realizability for each candidate; candidates split across `jobs`
// threads, each with its own Realizer. Output order matches input order.
inline std::vector<char> decide_block(unsigned d, unsigned k, const std::vector<Natural>& ns,
                                      unsigned jobs) {
  std::vector<char> out(ns.size(), 0);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(ns.size())));
  auto work = [&](unsigned part) {
    Realizer r(d, k);
    for (std::size_t i = part; i < ns.size(); i += jobs) out[i] = r.find(ns[i]).has_value();
  };
  if (jobs == 1) {
    work(0);
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
  pool.clear();  // joins
  return out;
}

}  // namespace detail

/// Tests the multiples of G from m(0,k) up to the horizon (the best proven
/// bound, or the override when smaller). Unless `exhaustive` is set the
/// sweep stops once C = m(1,k)/G consecutive multiples are realizable:
/// adding 1 to g_1 keeps an M-sequence and adds m(1,k), so all larger
/// multiples follow. Numbers not divisible by G are never realizable.
inline GapReport enumerate_gaps(unsigned d, unsigned k, const GapOptions& opt = {}) {
  const MdMatrix m(d);
  detail::check_dk(d, k, "enumerate_gaps");
  GapReport rep;
  rep.d = d;
  rep.k = k;
  rep.modulus = modulus_gcd(m, k);
  rep.simplex_count = m(0, k);
  const auto ph = detail::proven_horizon(m, k);
  rep.proven_horizon = ph.value;
  rep.horizon_source = ph.source;
  rep.horizon = ph.value;
  if (opt.horizon_override && *opt.horizon_override < ph.value) {
    rep.horizon = *opt.horizon_override;
    rep.horizon_overridden = true;
    rep.horizon_source = "override";
  }

  const Natural& step = rep.modulus;
  const Natural window = m(1, k) / step;
  const std::size_t block = 512 * std::max(1u, opt.jobs);
  Natural run = 0;
  Natural next = rep.simplex_count;
  rep.swept_to = 0;
  while (next <= rep.horizon && !rep.closed_by_window) {
    std::vector<Natural> ns;
    for (Natural n = next; n <= rep.horizon && ns.size() < block; n += step) ns.push_back(n);
    next = ns.back() + step;
    const auto ok = detail::decide_block(d, k, ns, opt.jobs);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      rep.swept_to = ns[i];
      if (ok[i]) {
        ++run;
      } else {
        run = 0;
        rep.gaps.push_back(ns[i]);
      }
      if (!opt.exhaustive && run >= window) {
        rep.closed_by_window = true;
        break;
      }
    }
  }
  rep.n_exact = rep.gaps.empty() ? Natural(0) : rep.gaps.back();
  rep.threshold = std::max(rep.n_exact, Natural(rep.simplex_count - step));
  rep.exact = !rep.horizon_overridden;
  return rep;
}

}  // namespace kfaces
