#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ztau/ring.hpp"

namespace ztau {

// (x, y, z) with exponent k; a solution when x^k + y^k = z^k.
struct PowerTriple {
  RingElement x;
  RingElement y;
  RingElement z;
  unsigned k = 2;

  bool nontrivial() const { return !x.is_zero() && !y.is_zero() && !z.is_zero(); }
  friend bool operator==(const PowerTriple&, const PowerTriple&) = default;
};

// x = sign*2lmn, y = l(m^2 - n^2), z = l(m^2 + n^2); x and y exchanged when
// `swapped` is set.
struct Parametrization {
  RingElement l;
  RingElement m;
  RingElement n;
  int sign = 1;
  bool swapped = false;

  friend bool operator==(const Parametrization&, const Parametrization&) = default;
};

PowerTriple from_params(const Parametrization& p);

// Exact check of x^k + y^k = z^k.
bool verify(const PowerTriple& t);

/**
 * Streams distinct nontrivial Pythagorean triples generated by l, m, n with
 * both coefficients in [-bound, bound], at most `limit` of them. Triples
 * equal up to exchanging x and y are reported once, in first-seen order of
 * the (l, m, n) scan. Returns the number emitted.
 */
std::size_t enumerate(int bound, std::size_t limit, const std::function<void(const PowerTriple&)>& sink);
std::vector<PowerTriple> enumerate(int bound, std::size_t limit);

/**
 * Recovers a parametrization of a nontrivial Pythagorean triple, so that
 * from_params(decompose(t)) == t exactly.
 *
 * With d = gcd(z - y, z + y), a = (z + y)/d and b = (z - y)/d are coprime
 * with square product, hence a = u m^2 and b = u n^2 for a unit u in
 * {1, -1, t^-1, -t^-1} (tried in that order). If 2 divides du the triple is
 * (2lmn, l(m^2-n^2), l(m^2+n^2)) with l = du/2; otherwise, after flipping
 * the sign of n if needed so that 2 | m - n, m' = (m-n)/2 and n' = (m+n)/2
 * give the swapped form with l = du.
 *
 * Throws DomainError for a zero component or a non-Pythagorean input, and
 * InternalError if no witness is found.
 */
Parametrization decompose(const PowerTriple& t);

}  // namespace ztau
