#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ztau/ring.hpp"

namespace ztau {

struct RenderMarker {
  RingElement point;
  std::string label;
};

// Exactly one of `iterations` (a substitution patch) or `interval` (model
// set members between two elements) selects the points to draw.
struct RenderSpec {
  std::optional<int> iterations;
  std::optional<std::pair<RingElement, RingElement>> interval;
  std::vector<RenderMarker> markers;
  double pixels_per_unit = 40.0;
  std::optional<int> width;   // overrides pixels_per_unit to fit
  std::optional<int> height;
};

/**
 * SVG of the tiling: a horizontal line cut into a-intervals (length t, blue)
 * and b-intervals (length 1, red) with their letters, a tick at every point,
 * and a taller black tick with a text label for each marker.
 *
 * Output depends only on the spec. Throws DomainError when the spec is
 * ambiguous or a marker lies outside the drawn range.
 */
std::string render_svg(const RenderSpec& spec);

}  // namespace ztau
