#pragma once

// Checked 128-bit arithmetic in Z[t] and a guarded floating k-th root probe.
// Used on hot paths; every overflow is reported, never wrapped.

#include <cmath>
#include <cstdint>
#include <optional>

#include "ztau/ring.hpp"

namespace ztau::detail {

using i128 = __int128;

struct SmallElement {
  i128 m = 0;
  i128 n = 0;

  bool is_zero() const { return m == 0 && n == 0; }
  friend bool operator==(const SmallElement&, const SmallElement&) = default;
};

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

[[nodiscard]] inline bool checked_add(const SmallElement& a, const SmallElement& b, SmallElement& out) {
  return !__builtin_add_overflow(a.m, b.m, &out.m) && !__builtin_add_overflow(a.n, b.n, &out.n);
}

[[nodiscard]] inline bool checked_mul(const SmallElement& a, const SmallElement& b, SmallElement& out) {
  i128 ac, bd, ad, bc, m, n;
  if (__builtin_mul_overflow(a.m, b.m, &ac) || __builtin_mul_overflow(a.n, b.n, &bd) ||
      __builtin_mul_overflow(a.m, b.n, &ad) || __builtin_mul_overflow(a.n, b.m, &bc)) {
    return false;
  }
  if (__builtin_add_overflow(ac, bd, &m) || __builtin_add_overflow(ad, bc, &n) ||
      __builtin_add_overflow(n, bd, &n)) {
    return false;
  }
  out = {m, n};
  return true;
}

[[nodiscard]] inline bool checked_pow(const SmallElement& base, unsigned k, SmallElement& out) {
  SmallElement result{1, 0};
  for (unsigned i = 0; i < k; ++i) {
    if (!checked_mul(result, base, result)) return false;
  }
  out = result;
  return true;
}

// Exact sign of the real embedding (2m + n + n sqrt5) / 2; needs |m|, |n| < 2^60.
inline int small_real_sign(const SmallElement& x) {
  const i128 u = 2 * x.m + x.n;
  const i128 v = x.n;
  const int su = (u > 0) - (u < 0);
  const int sv = (v > 0) - (v < 0);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // |u|, |v| < 2^62 here, so the squares fit.
  return u * u > 5 * v * v ? su : sv;
}

Integer to_integer(i128 v);
std::optional<i128> to_i128(const Integer& v);
RingElement to_ring(const SmallElement& x);
std::optional<SmallElement> to_small(const RingElement& x);

enum class RootStatus { found, absent, fallback };

struct RootProbe {
  RootStatus status = RootStatus::fallback;
  SmallElement root;
};

/**
 * Decides whether s is a k-th power in Z[t] using double-precision roots of
 * the two real embeddings as a candidate generator.
 *
 * The embedding that does not cancel is evaluated directly and the other is
 * recovered as norm(s) / first, so both carry a small relative error. A
 * candidate (p, q) is rejected only when its distance to the integer lattice
 * exceeds a bound several thousand ulps wider than the worst-case rounding
 * error; otherwise the 3x3 lattice neighbourhood is verified exactly. Returns
 * `fallback` when the magnitudes leave the range where that bound holds.
 *
 * For even k the returned root has positive real embedding.
 */
inline RootProbe probe_kth_root(const SmallElement& s, unsigned k) {
  constexpr i128 kLimit = static_cast<i128>(1) << 62;
  constexpr double kTau = 1.6180339887498948482;
  constexpr double kTauConj = -0.6180339887498948482;
  constexpr double kSqrt5 = 2.2360679774997896964;
  constexpr double kTolerance = 0x1p-40;

  if (s.is_zero()) return {RootStatus::found, {}};
  if (k < 2 || abs128(s.m) >= kLimit || abs128(s.n) >= kLimit) return {};

  const i128 norm = s.m * s.m + s.m * s.n - s.n * s.n;
  const double md = static_cast<double>(s.m);
  const double nd = static_cast<double>(s.n);
  const double nrm = static_cast<double>(norm);
  double e1, e2;
  if ((s.m >= 0) == (s.n >= 0) || s.m == 0 || s.n == 0) {
    e1 = md + nd * kTau;
    e2 = nrm / e1;
  } else {
    e2 = md + nd * kTauConj;
    e1 = nrm / e2;
  }

  const bool even = (k % 2) == 0;
  if (even && (e1 < 0 || e2 < 0)) return {RootStatus::absent, {}};

  auto real_root = [k](double v) {
    const double a = std::fabs(v);
    double r;
    switch (k) {
      case 2: r = std::sqrt(a); break;
      case 3: r = std::cbrt(a); break;
      case 4: r = std::sqrt(std::sqrt(a)); break;
      default: r = std::pow(a, 1.0 / static_cast<double>(k)); break;
    }
    return v < 0 ? -r : r;
  };

  const double w1 = real_root(e1);
  const double w2_abs = real_root(e2);
  const int combos = even ? 2 : 1;
  for (int c = 0; c < combos; ++c) {
    const double w2 = c == 0 ? w2_abs : -w2_abs;
    const double q = (w1 - w2) / kSqrt5;
    const double p = w1 - q * kTau;
    const double tol = kTolerance * (std::fabs(w1) + std::fabs(w2) + 1.0);
    const double pr = std::nearbyint(p);
    const double qr = std::nearbyint(q);
    if (std::fabs(p - pr) > tol || std::fabs(q - qr) > tol) continue;
    if (std::fabs(pr) > 0x1p60 || std::fabs(qr) > 0x1p60) return {};

    const auto p0 = static_cast<i128>(pr);
    const auto q0 = static_cast<i128>(qr);
    for (int dp = -1; dp <= 1; ++dp) {
      for (int dq = -1; dq <= 1; ++dq) {
        SmallElement cand{p0 + dp, q0 + dq};
        SmallElement power;
        if (!checked_pow(cand, k, power)) continue;
        if (power == s) {
          if (even && small_real_sign(cand) < 0) cand = {-cand.m, -cand.n};
          return {RootStatus::found, cand};
        }
      }
    }
  }
  return {RootStatus::absent, {}};
}

}  // namespace ztau::detail
