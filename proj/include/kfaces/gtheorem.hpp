/**
 * @brief The matrix M_d and the g-theorem correspondence f = g * M_d between
 * M-sequences and f-vectors of simple d-polytopes.
 */
#pragma once

#include "kfaces/core_arith.hpp"
#include "kfaces/macaulay.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kfaces {

/// Thrown by f_to_g when a vector has no M-sequence preimage.
class not_an_fvector : public std::domain_error {
 public:
  explicit not_an_fvector(const std::string& why) : std::domain_error("not an f-vector: " + why) {}
};

/// Face counts (f_0, ..., f_{d-1}).
struct FVector {
  unsigned d = 0;
  std::vector<Natural> counts;
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// (delta+1) x d matrix with m(i,k) = C(d+1-i, k+1) - C(i, k+1), delta = floor(d/2).
/// Immutable once built.
class MdMatrix {
 public:
  explicit MdMatrix(unsigned d) : d_(d), delta_(d / 2) {
    if (d == 0) throw std::invalid_argument("build_matrix: d must be >= 1");
    entries_.resize(delta_ + 1);
    for (unsigned i = 0; i <= delta_; ++i) {
      entries_[i].reserve(d);
      for (unsigned k = 0; k < d; ++k)
        entries_[i].push_back(binomial(d + 1 - i, k + 1) - binomial(i, k + 1));
    }
  }

  unsigned d() const { return d_; }
  unsigned delta() const { return delta_; }
  const Natural& operator()(unsigned i, unsigned k) const { return entries_.at(i).at(k); }
  const std::vector<Natural>& row(unsigned i) const { return entries_.at(i); }

  /// Column k, rows 0..delta.
  std::vector<Natural> column(unsigned k) const {
    std::vector<Natural> c;
    c.reserve(delta_ + 1);
    for (const auto& r : entries_) c.push_back(r.at(k));
    return c;
  }

 private:
  unsigned d_;
  unsigned delta_;
  std::vector<std::vector<Natural>> entries_;
};

inline MdMatrix build_matrix(unsigned d) { return MdMatrix(d); }

namespace detail {

inline GVector padded(const GVector& g, unsigned delta) {
  if (g.size() > delta + 1)
    throw std::invalid_argument("g-vector has " + std::to_string(g.size()) +
                                " entries, at most " + std::to_string(delta + 1) + " allowed");
  GVector out = g;
  out.entries.resize(delta + 1, Natural(0));
  return out;
}

}  // namespace detail

/// f = g * M_d without checking that g is an M-sequence. Short g is zero-padded.
inline FVector g_to_f_unchecked(const GVector& g, const MdMatrix& m) {
  const GVector p = detail::padded(g, m.delta());
  FVector f{m.d(), std::vector<Natural>(m.d(), Natural(0))};
  for (unsigned i = 0; i <= m.delta(); ++i) {
    if (p[i] == 0) continue;
    for (unsigned k = 0; k < m.d(); ++k) f.counts[k] += p[i] * m(i, k);
  }
  return f;
}

inline FVector g_to_f(const GVector& g, const MdMatrix& m) {
  if (!is_m_sequence(detail::padded(g, m.delta())))
    throw std::invalid_argument("g_to_f: input is not an M-sequence");
  return g_to_f_unchecked(g, m);
}

inline FVector g_to_f(const GVector& g, unsigned d) { return g_to_f(g, MdMatrix(d)); }

/// Inverse of g_to_f. Uses m(i, d-i) = 1 and m(i, k) = 0 for k > d-i: with
/// g_0 = 1, column d-i determines g_i from g_0..g_{i-1}. Every column is then
/// re-checked, so any inconsistent input is rejected.
inline GVector f_to_g(const FVector& f) {
  if (f.d == 0) throw std::invalid_argument("f_to_g: d must be >= 1");
  if (f.counts.size() != f.d)
    throw std::invalid_argument("f_to_g: expected " + std::to_string(f.d) + " face counts, got " +
                                std::to_string(f.counts.size()));
  const MdMatrix m(f.d);
  GVector g{std::vector<Natural>(m.delta() + 1, Natural(0))};
  g[0] = 1;
  for (unsigned i = 1; i <= m.delta(); ++i) {
    const unsigned col = f.d - i;
    Natural v = f.counts[col];
    for (unsigned j = 0; j < i; ++j) v -= g[j] * m(j, col);
    if (v < 0) throw not_an_fvector("g_" + std::to_string(i) + " would be negative");
    g[i] = v;
  }
  if (g_to_f_unchecked(g, m) != f) throw not_an_fvector("g * M_d does not reproduce f");
  if (!is_m_sequence(g)) throw not_an_fvector("preimage is not an M-sequence");
  return g;
}

inline bool is_simple_fvector(const FVector& f) {
  try {
    (void)f_to_g(f);
    return true;
  } catch (const not_an_fvector&) {
    return false;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

/// sum (-1)^i f_i; equals 1 - (-1)^d for every polytope.
inline Integer euler_sum(const FVector& f) {
  Integer s = 0;
  for (std::size_t i = 0; i < f.counts.size(); ++i) s += (i % 2 == 0) ? f.counts[i] : -f.counts[i];
  return s;
}

inline bool satisfies_euler(const FVector& f) { return euler_sum(f) == (f.d % 2 == 0 ? 0 : 2); }

}  // namespace kfaces
