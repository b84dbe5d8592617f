#pragma once

/**
 * @file window_shift.hpp
 * @brief Moving solution triples into the model set by powers of t.
 *
 * Multiplying by t scales the conjugate embedding by t' (|t'| < 1), and L is
 * closed under multiplication by t. So for x != 0 the exponents n with
 * x t^n in L form a half-line [n_x, oo), and a triple lands in L exactly
 * for n >= N = max(n_x, n_y, n_z).
 */

#include <array>
#include <cstddef>
#include <vector>

#include "ztau/ring.hpp"
#include "ztau/triples.hpp"

namespace ztau {

struct ShiftResult {
  long exponent = 0;                 // N
  PowerTriple shifted;               // components times t^N
  std::array<HalfSurd, 3> sigma;     // exact conjugate embeddings of the shifted components
};

// Least n such that x t^j lies in L for every j >= n. This is the least n
// with x t^n in L except on the orbit of -1, where -1 is a member but -t is
// not. Throws DomainError for x = 0.
long min_window_exponent(const RingElement& x);

// Throws DomainError for a zero component or a triple that is not a solution.
ShiftResult min_shift(const PowerTriple& t);

// t * t^(N+i) for i = 0 .. count-1.
std::vector<PowerTriple> solution_family(const PowerTriple& t, std::size_t count);

// Components of t times t^n.
PowerTriple shift(const PowerTriple& t, long n);

}  // namespace ztau
