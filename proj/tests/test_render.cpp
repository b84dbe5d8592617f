#include <regex>

#include <gtest/gtest.h>

#include "ztau/errors.hpp"
#include "ztau/render.hpp"

using namespace ztau;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Render, FirstPatch) {
  RenderSpec spec;
  spec.iterations = 0;
  const std::string svg = render_svg(spec);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_EQ(count(svg, "stroke-width=\"2\""), 3u);
  EXPECT_EQ(count(svg, ">a</text>"), 2u);
  EXPECT_EQ(count(svg, ">b</text>"), 0u);
  EXPECT_EQ(count(svg, "stroke=\"blue\" stroke-width=\"3\""), 2u);
}

TEST(Render, FigureMarkers) {
  RenderSpec spec;
  spec.iterations = 2;
  spec.markers = {{RingElement(1, 2), "x = 1+2t"}, {RingElement(2, 4), "y = 2+4t"}, {RingElement(3, 4), "z = 3+4t"}};
  const std::string svg = render_svg(spec);
  EXPECT_EQ(count(svg, "stroke-width=\"2\""), 17u);
  EXPECT_EQ(count(svg, ">a</text>") + count(svg, ">b</text>"), 16u);
  EXPECT_EQ(count(svg, "stroke=\"red\" stroke-width=\"3\""), count(svg, ">b</text>"));
  for (const char* label : {"x = 1+2t", "y = 2+4t", "z = 3+4t"}) EXPECT_NE(svg.find(label), std::string::npos);
  EXPECT_EQ(count(svg, "stroke=\"black\""), 3u);
}

TEST(Render, Deterministic) {
  RenderSpec spec;
  spec.interval = {RingElement(-5), RingElement(5)};
  spec.markers = {{RingElement(0, 1), ""}};
  EXPECT_EQ(render_svg(spec), render_svg(spec));
  spec.markers.clear();
  EXPECT_NE(render_svg(spec).find("</svg>"), std::string::npos);
}

TEST(Render, Errors) {
  RenderSpec spec;
  EXPECT_THROW(render_svg(spec), DomainError);
  spec.iterations = 1;
  spec.interval = {RingElement(0), RingElement(1)};
  EXPECT_THROW(render_svg(spec), DomainError);
  spec.interval.reset();
  spec.markers = {{RingElement(100), "far"}};
  EXPECT_THROW(render_svg(spec), DomainError);
}

TEST(Render, EscapesLabels) {
  RenderSpec spec;
  spec.iterations = 0;
  spec.markers = {{RingElement(0), "a<b & c"}};
  EXPECT_NE(render_svg(spec).find("a&lt;b &amp; c"), std::string::npos);
}
