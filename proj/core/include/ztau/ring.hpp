#pragma once

/**
 * @file ring.hpp
 * @brief Exact arithmetic in the golden-ratio ring Z[t], t = (1+sqrt5)/2.
 *
 * Elements are stored as an exact integer pair (m, n) meaning m + n*t.
 * Products reduce with t^2 = t + 1. Real embeddings are carried exactly
 * as HalfSurd values (u + v*sqrt5)/2 so that every sign decision is exact.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ztau {

using Integer = mpz_class;

class RingElement {
 public:
  RingElement() = default;
  RingElement(long m, long n = 0) : m_(m), n_(n) {}
  RingElement(Integer m, Integer n) : m_(std::move(m)), n_(std::move(n)) {}

  static RingElement zero() { return {}; }
  static RingElement one() { return {1, 0}; }
  static RingElement tau() { return {0, 1}; }

  const Integer& m() const noexcept { return m_; }
  const Integer& n() const noexcept { return n_; }

  bool is_zero() const { return sgn(m_) == 0 && sgn(n_) == 0; }

  RingElement& operator+=(const RingElement& rhs);
  RingElement& operator-=(const RingElement& rhs);
  RingElement& operator*=(const RingElement& rhs);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend RingElement operator-(const RingElement& a);

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.m_ == b.m_ && a.n_ == b.n_;
  }

 private:
  Integer m_;
  Integer n_;
};

RingElement pow(const RingElement& base, unsigned long exponent);

// Galois conjugation t -> t' = 1 - t, i.e. m + n*t -> (m+n) - n*t.
RingElement conj(const RingElement& x);

// m^2 + m*n - n^2 = x * conj(x).
Integer norm(const RingElement& x);

// Exact real number (u + v*sqrt5) / 2.
struct HalfSurd {
  Integer u;
  Integer v;

  HalfSurd() = default;
  HalfSurd(long u_, long v_) : u(u_), v(v_) {}
  HalfSurd(Integer u_, Integer v_) : u(std::move(u_)), v(std::move(v_)) {}

  friend HalfSurd operator+(const HalfSurd& a, const HalfSurd& b) { return {a.u + b.u, a.v + b.v}; }
  friend HalfSurd operator-(const HalfSurd& a, const HalfSurd& b) { return {a.u - b.u, a.v - b.v}; }
  friend HalfSurd operator-(const HalfSurd& a) { return {-a.u, -a.v}; }
  friend bool operator==(const HalfSurd& a, const HalfSurd& b) { return a.u == b.u && a.v == b.v; }
};

// Exact sign of (u + v*sqrt5)/2: -1, 0 or +1.
int surd_sign(const HalfSurd& s);

inline std::strong_ordering compare(const HalfSurd& a, const HalfSurd& b) {
  const int s = surd_sign(a - b);
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// Real embedding under t -> (1+sqrt5)/2: ((2m+n) + n*sqrt5) / 2.
HalfSurd embed(const RingElement& x);

// Embedding of conj(x), i.e. the value of x under t -> (1-sqrt5)/2.
HalfSurd embed_conj(const RingElement& x);

// Orders elements by their real embedding.
int compare_real(const RingElement& a, const RingElement& b);

struct RealLess {
  bool operator()(const RingElement& a, const RingElement& b) const { return compare_real(a, b) < 0; }
};

// Total order on the coefficient pair (m, n); used for canonical forms.
struct LexLess {
  bool operator()(const RingElement& a, const RingElement& b) const {
    const int c = cmp(a.m(), b.m());
    return c != 0 ? c < 0 : cmp(a.n(), b.n()) < 0;
  }
};

// Approximations; for display, search bounds and initial guesses only.
double to_double(const HalfSurd& s);
// Natural log of |s|, accurate in relative terms even when u and v nearly
// cancel. Requires s != 0.
double log_abs(const HalfSurd& s);

// Exact t^k for any k in Z.
RingElement tau_power(long k);

// +-t^exponent. Every unit of Z[t] has this form.
struct Unit {
  int sign = 1;
  long exponent = 0;

  RingElement value() const;
  Unit inverse() const { return {sign, -exponent}; }
  friend Unit operator*(const Unit& a, const Unit& b) {
    return {a.sign * b.sign, a.exponent + b.exponent};
  }
  friend bool operator==(const Unit&, const Unit&) = default;
};

bool is_unit(const RingElement& x);

// Grammar: [sign] term [(+|-) term], term := integer | [integer][*](t|tau),
// with at most one constant and one t-term. Spaces between tokens are ignored.
RingElement parse_element(std::string_view text);

// Canonical text: "m+n*t", zero terms suppressed, bare "0" for zero.
std::string format_element(const RingElement& x);

std::ostream& operator<<(std::ostream& os, const RingElement& x);

}  // namespace ztau
