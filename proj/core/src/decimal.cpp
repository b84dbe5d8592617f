#include "ztau/decimal.hpp"

#include "ztau/errors.hpp"

namespace ztau {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::string to_decimal(const HalfSurd& s, int places) {
  if (places < 0) throw DomainError("to_decimal: negative number of places");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));

  // w = scale * v * sqrt5 is irrational for v != 0, so
  // floor((c + w) / 2) = floor((c + floor(w)) / 2) for any integer c.
  const Integer radicand = 5 * s.v * s.v * scale * scale;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  Integer floor_w = root;
  if (sgn(s.v) < 0) {
    floor_w = -root;
    if (root * root != radicand) floor_w -= 1;
  }

  Integer rounded;
  if (places == 0 && sgn(s.v) == 0) {
    // u/2 may be a half: round away from zero.
    rounded = floor_div(Integer(abs(s.u) + 1), 2);
    if (sgn(s.u) < 0) rounded = -rounded;
  } else {
    // round(x) = floor(x + 1/2); ties only arise for v = 0, where scale * u is
    // even and x is exact.
    rounded = floor_div(Integer(scale * s.u + 1 + floor_w), 2);
  }

  const bool negative = sgn(rounded) < 0;
  std::string digits = Integer(abs(rounded)).get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return negative ? "-" + digits : digits;
}

}  // namespace ztau
