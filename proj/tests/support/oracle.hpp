#pragma once

// Independent reference arithmetic for tests. Shares no code with the
// library: plain int64 coefficients, brute-force searches, and __float128
// evaluation of real embeddings.

#include <cstdint>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

struct Z {
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend bool operator==(const Z&, const Z&) = default;
  friend auto operator<=>(const Z&, const Z&) = default;
};

inline Z add(Z a, Z b) { return {a.m + b.m, a.n + b.n}; }
inline Z neg(Z a) { return {-a.m, -a.n}; }
inline Z mul(Z a, Z b) {
  // t^2 = t + 1
  return {a.m * b.m + a.n * b.n, a.m * b.n + a.n * b.m + a.n * b.n};
}
inline Z power(Z a, unsigned k) {
  Z r{1, 0};
  for (unsigned i = 0; i < k; ++i) r = mul(r, a);
  return r;
}
inline std::int64_t norm(Z a) { return a.m * a.m + a.m * a.n - a.n * a.n; }
inline bool is_zero(Z a) { return a.m == 0 && a.n == 0; }

using f128 = __float128;

inline f128 sqrt5() {
  f128 x = 2.2360679774997896964;
  for (int i = 0; i < 6; ++i) x = (x + f128(5) / x) / 2;
  return x;
}

inline f128 real(Z a) {
  static const f128 tau = (1 + sqrt5()) / 2;
  return f128(a.m) + f128(a.n) * tau;
}

inline f128 real_conj(Z a) {
  static const f128 tau_conj = (1 - sqrt5()) / 2;
  return f128(a.m) + f128(a.n) * tau_conj;
}

inline double approx(f128 v) { return static_cast<double>(v); }

// Membership in [-1, t-1) evaluated in quad precision. Only trusted away from
// the window ends; callers compare exact boundary cases separately.
inline bool in_window_approx(Z a) {
  static const f128 hi = (sqrt5() - 1) / 2;
  const f128 s = real_conj(a);
  return s >= -1 && s < hi;
}

// All w with |coefficients| <= radius and w^k == t.
inline std::vector<Z> brute_roots(Z t, unsigned k, std::int64_t radius) {
  std::vector<Z> out;
  for (std::int64_t m = -radius; m <= radius; ++m) {
    for (std::int64_t n = -radius; n <= radius; ++n) {
      if (power(Z{m, n}, k) == t) out.push_back({m, n});
    }
  }
  return out;
}

inline std::vector<Z> box(std::int64_t bound) {
  std::vector<Z> out;
  for (std::int64_t m = -bound; m <= bound; ++m) {
    for (std::int64_t n = -bound; n <= bound; ++n) out.push_back({m, n});
  }
  return out;
}

}  // namespace oracle
