#pragma once

#include <string>

#include "ztau/ring.hpp"

namespace ztau {

// Decimal expansion of (u + v sqrt5)/2 rounded to `places` digits (nearest,
// halves away from zero). Uses only integer square roots, so the digits are
// reproducible everywhere.
std::string to_decimal(const HalfSurd& s, int places = 6);

}  // namespace ztau
