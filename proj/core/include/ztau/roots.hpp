#pragma once

#include <optional>

#include "ztau/ring.hpp"

namespace ztau {

/**
 * Some w with w^k = t, or nullopt when t is not a k-th power. Requires k >= 2
 * (throws DomainError otherwise).
 *
 * Candidates come from real k-th roots of the two embeddings of t; every
 * answer is verified exactly, and a 3x3 lattice neighbourhood of each
 * rounded candidate is checked so precision loss cannot cause a false
 * negative. For even k the root with positive real embedding is returned;
 * for odd k the root is unique.
 */
std::optional<RingElement> is_kth_power(const RingElement& t, unsigned k);

// Square root with nonnegative real embedding, if one exists.
std::optional<RingElement> sqrt(const RingElement& x);

namespace detail {

// Multiprecision route used when the 128-bit probe does not apply. Exposed
// for cross-checking the two routes against each other.
std::optional<RingElement> kth_root_multiprecision(const RingElement& t, unsigned k);

}  // namespace detail

}  // namespace ztau
