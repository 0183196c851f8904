#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "process.hpp"

#include <fstream>

namespace {

std::string script(const std::string& name, const std::string& text) {
  const std::string path = "test_cli_" + name + ".pi";
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("classify standard_fn(4)") {
  const auto r = run_cli("run " + script("f4", "space y = Y(32)\nloop f4 = C(4).once\nprobe classify f4\n"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\nword: g4\n") != std::string::npos);
}

TEST_CASE("sabotaged width profile fails the disjointness check") {
  const auto r = run_cli("run " + script("sabotage", "space y = Y(8) width=half\nprobe disjointness 8\n"));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("verdict: FAIL") != std::string::npos);
}

TEST_CASE("parse errors exit with 2 and a location") {
  const auto r = run_cli("run " + script("bad", "space y = Y(8)\nloop bad = C(1).once\n"));
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("line 2, column 14: circle index must be ≥ 2") != std::string::npos);
  CHECK(run_cli("run does-not-exist.pi").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("hausdorff").exit_code == 2);
}

TEST_CASE("runtime errors exit with 2") {
  // Breakpoint (1,1) is not on Y.
  const auto r = run_cli("run " + script("offspace", "space y = Y(8)\nloop p = points [(0,0,0), (1/2,1,1), (1,0,0)]\n"));
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("line 2:") != std::string::npos);
}

TEST_CASE("one-shot subcommands") {
  auto r = run_cli("word 'word g2 g3^-1 g3' --space X");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\nword: g2\n") != std::string::npos);
  r = run_cli("word alpha.updown");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\nword: 1\n") != std::string::npos);
  CHECK(run_cli("word alpha.updown --space X").exit_code == 2);

  r = run_cli("dist alpha.updown 'C(5).once'", "PI1LAB_DIGITS=6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\nsup_distance: 0.200000\n") != std::string::npos);
  CHECK(run_cli("dist alpha.updown alpha.updown", "PI1LAB_DIGITS=0.5").exit_code == 2);

  r = run_cli("hausdorff --upto 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict: PASS") != std::string::npos);
}

TEST_CASE("render writes only the pictures") {
  const auto r = run_cli("render " + script("render", "space y = Y(8)\nloop f = alpha.updown\nloop f5 = C(5).once\n"
                                                      "probe classify f\nrender f, f5 -> test_cli_render.svg\n"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  const std::string svg = read_text("test_cli_render.svg");
  CHECK(svg.find("class=\"loop-1\"") != std::string::npos);
}

TEST_CASE("identical script and seed give identical bytes") {
  const std::string path = script("seeded", "space y = Y(16)\nprobe slsc 1/4 20 seed=5\nprobe isomorphism 10 6 5 seed=5\n");
  const auto a = run_cli("run " + path);
  const auto b = run_cli("run " + path);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("golden report bytes") {
  const auto r = run_cli("run '" PI1LAB_GOLDEN_DIR "/basics.pi'", "PI1LAB_DIGITS=12");
  CHECK(r.exit_code == 1);
  CHECK(r.out == read_text(PI1LAB_GOLDEN_DIR "/basics.out"));
}
