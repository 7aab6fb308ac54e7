#include "honeycomb/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace honeycomb {

namespace {

constexpr std::array<const char*, 4> kPalette = {"#1f4e99", "#b03a2e", "#2e7d32", "#6a1b9a"};

std::string num(double v) {
  if (std::abs(v) < 5e-4) v = 0;  // no "-0.000"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Screen {
  double x, y;
};

Screen screen(const PointB& p) {
  auto [x, y] = project_to_screen(p);
  return {x, y};
}

}  // namespace

std::string render_svg(const std::vector<Diagram>& layers, const RenderOptions& options) {
  struct Line {
    Screen a, b;
    int multiplicity;
    bool ray;
    std::size_t layer;
  };
  std::vector<Line> lines;
  std::vector<std::pair<PointB, std::size_t>> vertices;
  auto add_vertex = [&](const PointB& p, std::size_t layer) {
    for (const auto& [q, l] : vertices)
      if (q == p && l == layer) return;
    vertices.emplace_back(p, layer);
  };
  for (std::size_t l = 0; l < layers.size(); ++l) {
    for (const auto& s : layers[l].segments) {
      lines.push_back({screen(s.start), screen(s.end), s.multiplicity, false, l});
      add_vertex(s.start, l);
      add_vertex(s.end, l);
    }
    for (const auto& r : layers[l].rays) {
      const auto [dx, dy] = project_to_screen(direction_point(r.direction));
      const Screen a = screen(r.start);
      lines.push_back({a, {a.x + options.ray_length * dx, a.y + options.ray_length * dy}, r.multiplicity, true, l});
      add_vertex(r.start, l);
    }
  }

  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  bool first = true;
  auto extend = [&](Screen p) {
    if (first) {
      lo_x = hi_x = p.x;
      lo_y = hi_y = p.y;
      first = false;
    }
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  };
  for (const auto& ln : lines) {
    extend(ln.a);
    extend(ln.b);
  }
  if (options.origin || first) extend({0, 0});
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
  const double margin = 0.1 * span;
  lo_x -= margin;
  hi_x += margin;
  lo_y -= margin;
  hi_y += margin;
  const double u = options.unit;
  // Screen y grows downwards in SVG.
  auto X = [&](double x) { return num((x - lo_x) * u); };
  auto Y = [&](double y) { return num((hi_y - y) * u); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num((hi_x - lo_x) * u)
      << "\" height=\"" << num((hi_y - lo_y) * u) << "\" viewBox=\"0 0 " << num((hi_x - lo_x) * u) << ' '
      << num((hi_y - lo_y) * u) << "\">\n";
  for (const auto& ln : lines) {
    const char* colour = kPalette[ln.layer % kPalette.size()];
    out << "<line class=\"" << (ln.ray ? "ray" : "edge") << "\" data-layer=\"" << ln.layer
        << "\" data-multiplicity=\"" << ln.multiplicity << "\" x1=\"" << X(ln.a.x) << "\" y1=\"" << Y(ln.a.y)
        << "\" x2=\"" << X(ln.b.x) << "\" y2=\"" << Y(ln.b.y) << "\" stroke=\"" << colour
        << "\" stroke-width=\"" << (ln.multiplicity > 1 ? 3 : 1.5) << "\"/>\n";
  }
  for (const auto& [p, layer] : vertices) {
    const Screen s = screen(p);
    out << "<circle class=\"vertex\" data-layer=\"" << layer << "\" cx=\"" << X(s.x) << "\" cy=\"" << Y(s.y)
        << "\" r=\"2.5\" fill=\"" << kPalette[layer % kPalette.size()] << "\"/>\n";
  }
  for (const auto& ln : lines) {
    if (ln.multiplicity <= 1) continue;
    out << "<text class=\"multiplicity\" x=\"" << X((ln.a.x + ln.b.x) / 2 + 0.1) << "\" y=\""
        << Y((ln.a.y + ln.b.y) / 2 + 0.1) << "\" font-size=\"12\" font-family=\"sans-serif\">" << ln.multiplicity
        << "</text>\n";
  }
  if (options.origin)
    out << "<circle class=\"origin\" cx=\"" << X(0) << "\" cy=\"" << Y(0) << "\" r=\"4\" fill=\"black\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const Honeycomb& h, const RenderOptions& options) {
  return render_svg(std::vector<Diagram>{to_diagram(h)}, options);
}

}  // namespace honeycomb
