#pragma once

#include <optional>
#include <utility>

#include "ztau/ring.hpp"

namespace ztau {

struct DivResult {
  RingElement quotient;
  RingElement remainder;
};

/**
 * Euclidean division with |norm| as the size function.
 *
 * The quotient rounds each coordinate of x*conj(y)/norm(y) to the nearest
 * integer (ties away from zero). The remainder then satisfies
 * |norm(r)| <= 5/16 |norm(y)|, comfortably inside |norm(r)| < |norm(y)|.
 * Throws DomainError when y is zero.
 */
DivResult euclid_div(const RingElement& x, const RingElement& y);

// Quotient x / y when y divides x exactly. Throws DomainError when y is zero.
std::optional<RingElement> divides(const RingElement& y, const RingElement& x);

/**
 * The distinguished associate of x: the unique +-t^j * x whose real
 * embedding e is positive and lies in [sqrt|N|, t*sqrt|N|), N = norm(x).
 *
 * Returns (c, u) with x = u.value() * c. Throws DomainError for x = 0.
 */
std::pair<RingElement, Unit> canonical_associate(const RingElement& x);

// Canonical greatest common divisor. gcd(x, 0) is the canonical associate of
// x; gcd(0, 0) throws DomainError.
RingElement gcd(const RingElement& x, const RingElement& y);

}  // namespace ztau
