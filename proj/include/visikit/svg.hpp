#pragma once
// SVG figures: flat arrangements as horizontal bars against the y-axis,
// cylindrical arrangements as radial segments from a unit circle, drawings as
// points on a circle joined by straight chords. Output is deterministic.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "io.hpp"
#include "model.hpp"

namespace visikit {

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

inline std::string svg_open(double w, double h) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
         "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
}

inline std::string svg_line(const char* cls, double x1, double y1, double x2, double y2,
                            const char* stroke, double width) {
  return "  <line class=\"" + std::string(cls) + "\" x1=\"" + num(x1) + "\" y1=\"" + num(y1) +
         "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) + "\" stroke=\"" + stroke +
         "\" stroke-width=\"" + num(width) + "\"/>\n";
}

inline double angle_of(std::size_t i, std::size_t n) {
  return 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n) - std::numbers::pi / 2;
}

inline Length longest(const std::vector<Length>& lengths) {
  return lengths.empty() ? 1 : std::max<Length>(1, *std::max_element(lengths.begin(), lengths.end()));
}

} // namespace detail

inline std::string svg(const FlatArrangement& a) {
  const double spacing = 20, margin = 20, width = 400;
  const double height = 2 * margin + spacing * static_cast<double>(std::max<std::size_t>(a.size(), 1));
  const double scale = (width - 2 * margin) / static_cast<double>(detail::longest(a.lengths));
  std::string out = detail::svg_open(width, height);
  out += detail::svg_line("axis", margin, margin / 2, margin, height - margin / 2, "black", 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double y = height - margin - spacing * (static_cast<double>(i) + 0.5);
    out += detail::svg_line("bar", margin, y, margin + scale * static_cast<double>(a.lengths[i]), y,
                            "steelblue", 4);
  }
  return out + "</svg>\n";
}

inline std::string svg(const CylArrangement& a) {
  const double size = 400, c = size / 2, r = 60, reach = 120;
  const double scale = reach / static_cast<double>(detail::longest(a.lengths));
  std::string out = detail::svg_open(size, size);
  out += "  <circle class=\"axis\" cx=\"" + detail::num(c) + "\" cy=\"" + detail::num(c) + "\" r=\"" +
         detail::num(r) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double t = detail::angle_of(i, a.size());
    const double outer = r + scale * static_cast<double>(a.lengths[i]);
    out += detail::svg_line("bar", c + r * std::cos(t), c + r * std::sin(t), c + outer * std::cos(t),
                            c + outer * std::sin(t), "steelblue", 4);
  }
  return out + "</svg>\n";
}

inline std::string svg(const ConvexDrawing& d) {
  const double size = 400, c = size / 2, r = 160;
  const auto pos = [&](std::size_t i) {
    const double t = detail::angle_of(i, d.n);
    return std::pair{c + r * std::cos(t), c + r * std::sin(t)};
  };
  std::string out = detail::svg_open(size, size);
  for (const Edge& e : normalize_edges(d.edges)) {
    const auto [x1, y1] = pos(e.u);
    const auto [x2, y2] = pos(e.v);
    out += detail::svg_line("chord", x1, y1, x2, y2, "gray", 1.5);
  }
  for (std::size_t i = 0; i < d.n; ++i) {
    const auto [x, y] = pos(i);
    out += "  <circle class=\"point\" cx=\"" + detail::num(x) + "\" cy=\"" + detail::num(y) +
           "\" r=\"4\" fill=\"black\"/>\n";
  }
  return out + "</svg>\n";
}

inline std::string svg(const Arrangement& a) {
  return std::visit([](const auto& x) { return svg(x); }, a);
}

template <typename T>
void export_svg(const T& object, const std::string& path) {
  write_text_file(path, svg(object));
}

} // namespace visikit
