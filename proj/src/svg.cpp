#include "pi1lab/svg.hpp"

#include <fstream>
#include <stdexcept>

namespace pi1lab {

namespace {

constexpr long kScale = 1000;
constexpr long kMargin = 40;
constexpr long kCanvas = 2 * kMargin + kScale;

std::string canvas_x(const Rational& x) {
  return to_decimal(Rational(kMargin) + kScale * x, 3);
}

std::string canvas_y(const Rational& y) {
  return to_decimal(Rational(kMargin + kScale) - kScale * y, 3);
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

void line(std::string& out, const Segment& s, const std::string& cls, const std::string& title) {
  out += "  <line class=\"" + cls + "\" x1=\"" + canvas_x(s.a().x) + "\" y1=\"" + canvas_y(s.a().y) +
         "\" x2=\"" + canvas_x(s.b().x) + "\" y2=\"" + canvas_y(s.b().y) + "\"><title>" + title +
         "</title></line>\n";
}

}  // namespace

std::string render_svg(const SvgScene& scene) {
  const std::string size = std::to_string(kCanvas);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size +
                    "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  out +=
      "  <style>\n"
      "    .edge { stroke: #444; stroke-width: 1; }\n"
      "    .alpha { stroke: #b22; stroke-width: 2; }\n"
      "    polyline { fill: none; stroke-width: 2; stroke-opacity: 0.7; }\n"
      "    .loop-0 { stroke: #17becf; }\n"
      "    .loop-1 { stroke: #2ca02c; }\n"
      "    .loop-2 { stroke: #9467bd; }\n"
      "    .loop-3 { stroke: #ff7f0e; }\n"
      "  </style>\n";
  if (scene.space) {
    const Space& space = *scene.space;
    for (int n = kFirstGenerator; n <= space.max_index(); ++n) {
      const Circle& c = space.circle(n);
      for (int e = 0; e < 3; ++e) {
        line(out, c.edges[static_cast<std::size_t>(e)], "edge",
             "C" + std::to_string(n) + " edge " + std::to_string(e));
      }
    }
    if (space.has_alpha()) {
      line(out, alpha_segment(), "alpha", "alpha");
    }
  }
  for (std::size_t i = 0; i < scene.loops.size(); ++i) {
    std::string points;
    for (const Breakpoint& b : scene.loops[i].loop.breakpoints()) {
      points += (points.empty() ? "" : " ") + canvas_x(b.point.x) + "," + canvas_y(b.point.y);
    }
    out += "  <polyline class=\"loop-" + std::to_string(i) + "\" points=\"" + points + "\"><title>" +
           escape(scene.loops[i].name) + "</title></polyline>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_svg(const SvgScene& scene, const std::string& path) {
  const std::string text = render_svg(scene);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  file << text;
  file.close();
  if (!file) {
    throw std::runtime_error("failed writing '" + path + "'");
  }
}

}  // namespace pi1lab
