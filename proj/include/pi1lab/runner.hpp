// Execution of parsed scripts and the built-in demo. Reports go to the output
// stream separated by blank lines; diagnostics go to the error stream.
//
// Exit codes: 0 when every verdict is PASS, 1 when some verdict is FAIL, 2 for
// usage, parse and runtime errors.

#pragma once

#include "pi1lab/dsl.hpp"
#include "pi1lab/loops.hpp"
#include "pi1lab/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pi1lab {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

struct RunOptions {
  int digits = 40;
  /// Seed for probes whose statement carries no seed=.
  std::uint64_t seed = 0;
  bool run_probes = true;
  bool run_renders = true;
};

/// Runs the statements in order and stops at the first runtime error.
int run_script(const dsl::Script& script, const RunOptions& options, std::ostream& out, std::ostream& err);
/// Parses, then runs; parse errors exit with kExitError.
int run_text(std::string_view text, const RunOptions& options, std::ostream& out, std::ostream& err);

struct DemoOptions {
  int n_max = 32;
  std::uint64_t seed = 1;
  int digits = 40;
  std::string svg_path = "whitehead.svg";
};

/// The full pipeline on Y(max(n_max, 20)): disjointness, Hausdorff table,
/// isomorphism round trips, non-discreteness, discreteness, small loops and
/// the joint report, closed by a summary. Writes an SVG of Y(8) with f and f_5.
int run_whitehead_demo(const DemoOptions& options, std::ostream& out, std::ostream& err);

/// Builds the space a declaration describes.
Space build_space(const dsl::SpaceDecl& decl);

/// Loop for a literal that binds no names.
Loop build_loop(const dsl::LoopExpr& expr, const Space& space);

ProbeReport classify_report(const std::string& name, const Loop& loop);
ProbeReport dist_report(const std::string& a, const Loop& f, const std::string& b, const Loop& g, int digits);

/// Reads PI1LAB_DIGITS (default 40). Throws std::invalid_argument unless it
/// is an integer in [1, 1000].
int digits_from_env();

}  // namespace pi1lab
