#include "ztau/division.hpp"

#include <cmath>

#include "ztau/errors.hpp"

namespace ztau {

namespace {

// Nearest integer to num/den, halves rounded away from zero.
Integer round_quotient(const Integer& num, const Integer& den) {
  const Integer a = abs(num);
  const Integer d = abs(den);
  Integer q = (2 * a + d) / (2 * d);  // both nonnegative: truncation is floor
  if (sgn(num) * sgn(den) < 0) q = -q;
  return q;
}

// Sign of e^2 - c * |N| where e = embed(x) > 0 and c = embed(scale).
int compare_square(const RingElement& x, const Integer& abs_norm, const RingElement& scale) {
  const RingElement sq = x * x;
  return surd_sign(embed(sq) - embed(scale * RingElement(abs_norm, 0)));
}

}  // namespace

DivResult euclid_div(const RingElement& x, const RingElement& y) {
  if (y.is_zero()) throw DomainError("euclid_div: division by zero");
  const Integer ny = norm(y);
  const RingElement scaled = x * conj(y);
  RingElement q(round_quotient(scaled.m(), ny), round_quotient(scaled.n(), ny));
  RingElement r = x - q * y;
  return {std::move(q), std::move(r)};
}

std::optional<RingElement> divides(const RingElement& y, const RingElement& x) {
  if (y.is_zero()) throw DomainError("divides: zero divisor");
  const Integer ny = norm(y);
  const RingElement scaled = x * conj(y);
  if (!mpz_divisible_p(scaled.m().get_mpz_t(), ny.get_mpz_t()) ||
      !mpz_divisible_p(scaled.n().get_mpz_t(), ny.get_mpz_t())) {
    return std::nullopt;
  }
  return RingElement(Integer(scaled.m() / ny), Integer(scaled.n() / ny));
}

std::pair<RingElement, Unit> canonical_associate(const RingElement& x) {
  if (x.is_zero()) throw DomainError("canonical_associate of zero");

  const int sign = surd_sign(embed(x));
  RingElement y = sign < 0 ? -x : x;
  const Integer abs_norm = abs(norm(x));

  // Initial guess from logs: want log e - log sqrt|N| in [0, log t).
  const double log_tau = std::log((1.0 + std::sqrt(5.0)) / 2.0);
  const double log_norm = log_abs(HalfSurd(Integer(2 * abs_norm), Integer(0)));
  const double offset = log_abs(embed(y)) - 0.5 * log_norm;
  long j = -static_cast<long>(std::floor(offset / log_tau));
  y *= tau_power(j);

  // Exact correction; at most a step or two.
  const RingElement tau = RingElement::tau();
  const RingElement tau_inv(-1, 1);
  const RingElement tau_sq(1, 1);
  while (compare_square(y, abs_norm, RingElement::one()) < 0) {
    y *= tau;
    ++j;
  }
  while (compare_square(y, abs_norm, tau_sq) >= 0) {
    y *= tau_inv;
    --j;
  }
  // x = sign * t^-j * y
  return {std::move(y), Unit{sign, -j}};
}

RingElement gcd(const RingElement& x, const RingElement& y) {
  if (x.is_zero() && y.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  RingElement a = x;
  RingElement b = y;
  while (!b.is_zero()) {
    RingElement r = euclid_div(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return canonical_associate(a).first;
}

}  // namespace ztau
