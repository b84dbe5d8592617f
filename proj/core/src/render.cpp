#include "ztau/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ztau/errors.hpp"
#include "ztau/model_set.hpp"

namespace ztau {

namespace {

constexpr double kMargin = 40.0;
constexpr int kDefaultHeight = 160;
constexpr const char* kColorA = "blue";
constexpr const char* kColorB = "red";

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// 'a', 'b', or '?' for a gap that is neither t nor 1.
char gap_letter(const RingElement& from, const RingElement& to) {
  const RingElement d = to - from;
  if (d == RingElement::tau()) return 'a';
  if (d == RingElement::one()) return 'b';
  return '?';
}

const char* letter_color(char letter) {
  if (letter == 'a') return kColorA;
  if (letter == 'b') return kColorB;
  return "gray";
}

}  // namespace

std::string render_svg(const RenderSpec& spec) {
  if (spec.iterations.has_value() == spec.interval.has_value()) {
    throw DomainError("render: give exactly one of iterations or interval");
  }

  std::vector<RingElement> points;
  RingElement lo, hi;
  if (spec.iterations) {
    Patch p = patch(*spec.iterations);
    points = std::move(p.points);
    lo = p.hull_lo;
    hi = p.hull_hi;
  } else {
    lo = spec.interval->first;
    hi = spec.interval->second;
    if (compare_real(lo, hi) > 0) throw DomainError("render: interval is reversed");
    points = members_in_interval(embed(lo), embed(hi));
  }
  for (const auto& mk : spec.markers) {
    if (compare_real(mk.point, lo) < 0 || compare_real(mk.point, hi) > 0) {
      throw DomainError("render: marker " + format_element(mk.point) + " lies outside the rendered interval");
    }
  }

  const double lo_d = to_double(embed(lo));
  const double length = to_double(embed(hi)) - lo_d;
  double scale = spec.pixels_per_unit;
  if (spec.width && length > 0) scale = (*spec.width - 2 * kMargin) / length;
  if (!(scale > 0)) throw DomainError("render: nonpositive scale");
  const int width = spec.width.value_or(static_cast<int>(std::ceil(length * scale + 2 * kMargin)));
  const int height = spec.height.value_or(kDefaultHeight);
  const double base = height / 2.0;
  auto px = [&](const RingElement& x) { return kMargin + (to_double(embed(x)) - lo_d) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  std::vector<char> letters;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const char letter = gap_letter(points[i], points[i + 1]);
    letters.push_back(letter);
    const double x1 = px(points[i]);
    const double x2 = px(points[i + 1]);
    svg << "<line x1=\"" << num(x1) << "\" y1=\"" << num(base) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(base)
        << "\" stroke=\"" << letter_color(letter) << "\" stroke-width=\"3\"/>\n";
    if (letter != '?') {
      svg << "<text x=\"" << num((x1 + x2) / 2) << "\" y=\"" << num(base - 10)
          << "\" text-anchor=\"middle\" font-family=\"serif\" font-size=\"14\" fill=\"" << letter_color(letter)
          << "\">" << letter << "</text>\n";
    }
  }

  for (std::size_t i = 0; i < points.size(); ++i) {
    char letter = '?';
    if (i < letters.size()) {
      letter = letters[i];
    } else if (!letters.empty()) {
      letter = letters.back();
    }
    const double x = px(points[i]);
    svg << "<line x1=\"" << num(x) << "\" y1=\"" << num(base - 6) << "\" x2=\"" << num(x) << "\" y2=\""
        << num(base + 6) << "\" stroke=\"" << letter_color(letter) << "\" stroke-width=\"2\"/>\n";
  }

  for (std::size_t i = 0; i < spec.markers.size(); ++i) {
    const auto& mk = spec.markers[i];
    const double x = px(mk.point);
    const bool above = i % 2 == 0;
    svg << "<line x1=\"" << num(x) << "\" y1=\"" << num(base - 12) << "\" x2=\"" << num(x) << "\" y2=\""
        << num(base + 12) << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
    svg << "<text x=\"" << num(x) << "\" y=\"" << num(above ? base - 30 : base + 34)
        << "\" text-anchor=\"middle\" font-family=\"serif\" font-size=\"14\" fill=\"black\">"
        << escape(mk.label.empty() ? format_element(mk.point) : mk.label) << "</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace ztau
