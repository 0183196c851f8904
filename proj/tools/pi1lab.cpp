// Command-line front end: scripts, the built-in demo and one-shot queries.

#include "pi1lab/dsl.hpp"
#include "pi1lab/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace pi1lab;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

struct LiteralSpace {
  std::string kind = "Y";
  int max_index = 32;
  std::string width = "default";

  dsl::SpaceDecl decl() const {
    return {"cli", kind == "X" ? SpaceKind::bouquet_x : SpaceKind::compact_y, max_index, width};
  }
};

void add_space_options(CLI::App* cmd, LiteralSpace& space) {
  cmd->add_option("--space", space.kind, "space the loops live in")->check(CLI::IsMember({"X", "Y"}));
  cmd->add_option("--max", space.max_index, "largest circle index")->check(CLI::Range(2, 1000000));
  cmd->add_option("--width", space.width, "width profile: default, pow10, cubic or half");
}

Loop literal_loop(const std::string& text, const dsl::SpaceDecl& decl, const Space& space) {
  try {
    return build_loop(dsl::parse_loop_literal(text, decl), space);
  } catch (const dsl::ParseError& e) {
    throw std::invalid_argument("in '" + text + "', column " + std::to_string(e.column()) + ": " + e.message());
  }
}

int emit(const ProbeReport& report) {
  std::cout << serialize(report);
  return report.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pi1lab: exact experiments with loops in a bouquet of thin triangles and its closure"};
  app.require_subcommand(1);

  std::string script_path;
  auto* run = app.add_subcommand("run", "run a script and print its reports");
  run->add_option("script", script_path, "script file")->required();

  auto* demo = app.add_subcommand("demo", "built-in demonstrations");
  demo->require_subcommand(1);
  DemoOptions demo_options;
  auto* whitehead = demo->add_subcommand("whitehead", "X and Y: isomorphic groups, different topologies");
  whitehead->add_option("--nmax", demo_options.n_max, "largest n for the non-discreteness table")
      ->check(CLI::Range(2, 1000));
  whitehead->add_option("--seed", demo_options.seed, "seed for the randomized probes");
  whitehead->add_option("--svg", demo_options.svg_path, "where to write the picture of Y(8)");

  std::string word_literal;
  LiteralSpace word_space;
  auto* word = app.add_subcommand("word", "print the class of a loop literal");
  word->add_option("loop", word_literal, "loop literal, e.g. 'word g2 g3^-1' or 'C(4).once'")->required();
  add_space_options(word, word_space);

  std::string dist_a;
  std::string dist_b;
  LiteralSpace dist_space;
  auto* dist = app.add_subcommand("dist", "exact sup-distance between two loop literals");
  dist->add_option("f", dist_a, "first loop literal")->required();
  dist->add_option("g", dist_b, "second loop literal")->required();
  add_space_options(dist, dist_space);

  int upto = 20;
  auto* hausdorff = app.add_subcommand("hausdorff", "table of d_H(C_n, alpha) for n = 2..K");
  hausdorff->add_option("--upto", upto, "largest n")->required()->check(CLI::Range(2, 100000));

  std::string render_path;
  auto* render = app.add_subcommand("render", "write the SVG files of a script without running probes");
  render->add_option("script", render_path, "script file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    const int digits = digits_from_env();
    if (*run || *render) {
      RunOptions options;
      options.digits = digits;
      options.run_probes = static_cast<bool>(*run);
      return run_text(read_file(*run ? script_path : render_path), options, std::cout, std::cerr);
    }
    if (*demo) {
      demo_options.digits = digits;
      return run_whitehead_demo(demo_options, std::cout, std::cerr);
    }
    if (*word) {
      const dsl::SpaceDecl decl = word_space.decl();
      const Space space = build_space(decl);
      return emit(classify_report(word_literal, literal_loop(word_literal, decl, space)));
    }
    if (*dist) {
      const dsl::SpaceDecl decl = dist_space.decl();
      const Space space = build_space(decl);
      return emit(dist_report(dist_a, literal_loop(dist_a, decl, space), dist_b,
                              literal_loop(dist_b, decl, space), digits));
    }
    if (*hausdorff) {
      return emit(hausdorff_convergence(Space::compact(upto), upto, digits));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
