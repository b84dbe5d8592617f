#include "ztau/window_shift.hpp"

#include <algorithm>
#include <cmath>

#include "ztau/errors.hpp"
#include "ztau/model_set.hpp"

namespace ztau {

long min_window_exponent(const RingElement& x) {
  if (x.is_zero()) throw DomainError("min_window_exponent of zero");

  // |conj(x t^n)| = |conj(x)| t^-n. Writing |conj(x)| = t^L, the image lies
  // outside the window when it exceeds 1 in absolute value (n < L) and inside
  // when it is below t - 1 (n > L + 1). Start a little below L, confirm the
  // start is outside, then walk up.
  const double log_tau = std::log((1.0 + std::sqrt(5.0)) / 2.0);
  const double level = log_abs(embed_conj(x)) / log_tau;
  long n = static_cast<long>(std::floor(level)) - 2;

  RingElement y = x * tau_power(n);
  const RingElement tau_inv(-1, 1);
  while (contains(y)) {
    y *= tau_inv;
    --n;
  }
  const RingElement tau = RingElement::tau();
  do {
    y *= tau;
    ++n;
  } while (!contains(y));
  // -1 is a member but -t is not; membership resumes at -t^2.
  if (y == RingElement(-1)) n += 2;
  return n;
}

PowerTriple shift(const PowerTriple& t, long n) {
  const RingElement f = tau_power(n);
  return {t.x * f, t.y * f, t.z * f, t.k};
}

ShiftResult min_shift(const PowerTriple& t) {
  if (!t.nontrivial()) throw DomainError("min_shift: triple has a zero component");
  if (!verify(t)) throw DomainError("min_shift: triple does not satisfy x^k + y^k = z^k");

  const long exponent =
      std::max({min_window_exponent(t.x), min_window_exponent(t.y), min_window_exponent(t.z)});
  ShiftResult out;
  out.exponent = exponent;
  out.shifted = shift(t, exponent);
  out.sigma = {embed_conj(out.shifted.x), embed_conj(out.shifted.y), embed_conj(out.shifted.z)};
  return out;
}

std::vector<PowerTriple> solution_family(const PowerTriple& t, std::size_t count) {
  PowerTriple current = min_shift(t).shifted;
  std::vector<PowerTriple> out;
  const RingElement tau = RingElement::tau();
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(current);
    current = {current.x * tau, current.y * tau, current.z * tau, current.k};
  }
  return out;
}

}  // namespace ztau
