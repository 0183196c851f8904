#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pi1lab/svg.hpp"

#include <cstdio>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

using namespace pi1lab;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("Y(8) draws three lines per circle and one for alpha") {
  const Space y = Space::compact(8);
  const std::string svg = render_svg({y, {}});
  // C_2..C_8 are seven triangles.
  CHECK(count(svg, "<line ") == 7 * 3 + 1);
  CHECK(count(svg, "class=\"alpha\"") == 1);
  CHECK(count(render_svg({y.as_bouquet(), {}}), "<line ") == 7 * 3);
}

TEST_CASE("canvas coordinates") {
  const Space y = Space::compact(2);
  const std::string svg = render_svg({y, {}});
  // alpha runs from (0,0) to (0,1).
  CHECK(svg.find("x1=\"40.000\" y1=\"1040.000\" x2=\"40.000\" y2=\"40.000\"") != std::string::npos);
  // B_2 = (1/2, 1).
  CHECK(svg.find("x2=\"540.000\" y2=\"40.000\"") != std::string::npos);
  // Every coordinate carries exactly three decimals.
  const std::regex coordinate(R"((x1|y1|x2|y2)="-?\d+\.\d{3}")");
  CHECK(std::distance(std::sregex_iterator(svg.begin(), svg.end(), coordinate), std::sregex_iterator()) == 4 * 4);
}

TEST_CASE("empty scene is a minimal document") {
  const std::string svg = render_svg({});
  CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
  CHECK(svg.size() >= 6);
  CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
  CHECK(count(svg, "<line") == 0);
  CHECK(count(svg, "<polyline") == 0);
}

TEST_CASE("f and f5 overlaid get distinct classes") {
  const Space y = Space::compact(8);
  const std::string svg = render_svg({y, {{"f", standard_f(y)}, {"f5", standard_fn(5, y)}}});
  CHECK(count(svg, "<polyline ") == 2);
  const std::regex cls(R"re(<polyline class="([^"]+)")re");
  std::set<std::string> classes;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), cls); it != std::sregex_iterator(); ++it) {
    classes.insert((*it)[1]);
  }
  CHECK(classes == std::set<std::string>{"loop-0", "loop-1"});
  CHECK(svg.find("<title>f5</title>") != std::string::npos);
}

TEST_CASE("rendering is deterministic and written verbatim") {
  const SvgScene scene{Space::compact(8), {{"f", standard_f(Space::compact(8))}}};
  const std::string once = render_svg(scene);
  CHECK(render_svg(scene) == once);
  const std::string path = "test_svg_output.svg";
  write_svg(scene, path);
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  CHECK(text.str() == once);
  std::remove(path.c_str());
  CHECK_THROWS_AS(write_svg(scene, "no/such/directory/x.svg"), std::runtime_error);
}
