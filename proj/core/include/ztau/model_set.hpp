#pragma once

/**
 * @file model_set.hpp
 * @brief The Fibonacci model set L = { x in Z[t] : conj(x) in [-1, t-1) }.
 *
 * Membership is decided exactly from the window. Patches generated by the
 * substitution a -> ab, b -> a are kept as an independent cross-check; the
 * two descriptions differ at exactly two points, -t (in every patch, not in
 * L) and -1 (in L, never in a patch).
 */

#include <string>
#include <vector>

#include "ztau/ring.hpp"

namespace ztau {

// Half-open interval [lo, hi) in internal space.
struct Window {
  HalfSurd lo;
  HalfSurd hi;

  static Window fibonacci() { return {HalfSurd(-2, 0), HalfSurd(-1, 1)}; }  // [-1, t-1)

  bool holds(const HalfSurd& value) const {
    return surd_sign(value - lo) >= 0 && surd_sign(value - hi) < 0;
  }
};

bool contains(const RingElement& x);

// Letters 'a' (length t) and 'b' (length 1). The left word is written in
// reading order, so its last letter touches the origin.
struct SubstitutionWord {
  std::string left;
  std::string right;

  // Throws DomainError unless both sides are nonempty words over {a, b}.
  void validate() const;
  friend bool operator==(const SubstitutionWord&, const SubstitutionWord&) = default;
};

SubstitutionWord substitute(const SubstitutionWord& word);

struct Patch {
  std::vector<RingElement> points;  // strictly increasing real embedding
  RingElement hull_lo;
  RingElement hull_hi;
};

inline constexpr int kDefaultPatchCap = 12;

// Endpoints of the word reached from a|a after 2*iterations substitutions.
// patch(0) = {-t, 0, t}. Throws CapExceeded when iterations > cap and
// DomainError when iterations < 0.
Patch patch(int iterations, int cap = kDefaultPatchCap);

// Geometric realization of an arbitrary substitution word.
Patch realize(const SubstitutionWord& word);

// All members x of L with lo <= x <= hi (real embedding), ascending.
std::vector<RingElement> members_in_interval(const HalfSurd& lo, const HalfSurd& hi);

}  // namespace ztau
