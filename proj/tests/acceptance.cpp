// Acceptance run: one PASS/FAIL line per criterion, with wall-clock time
// against a fixed budget. Exits nonzero when any criterion fails.

#include "pi1lab/pi1.hpp"
#include "pi1lab/spaces.hpp"
#include "process.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

using namespace pi1lab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

Outcome construction_fidelity() {
  Outcome o;
  const WidthProfile profile = WidthProfile::pow10();
  for (int n = 2; n <= 20; ++n) {
    const Circle c = build_circle(n, profile);
    const Rational w = pow10(-10L * n);
    const Point2 apex{make_rational(1, n), Rational(1)};
    const Point2 far{apex.x + w * n, apex.y - w};
    o.require(c.apex == apex && c.far == far, "vertices of C" + std::to_string(n));
    o.require(c.edges[0] == Segment(base_point(), apex) && c.edges[1] == Segment(apex, far) &&
                  c.edges[2] == Segment(far, base_point()),
              "edges of C" + std::to_string(n));
  }
  const ProbeReport report = verify_disjointness(Space::compact(20), 20);
  o.require(report.passed(), "disjointness verdict");
  o.require(report.results.at(0) == std::pair<std::string, std::string>{"pairs_checked", "171"}, "171 pairs");
  return o;
}

Outcome hausdorff_convergence_check() {
  Outcome o;
  const Space y = Space::compact(20);
  const Segment alpha[] = {alpha_segment()};
  std::optional<Surd> previous;
  for (int n = 2; n <= 20; ++n) {
    const Surd d_sq = hausdorff_distance_sq(y.circle(n).edges, alpha);
    // The farthest point of C_n from alpha is D_n, at x = 1/n + n w_n.
    const Rational x = make_rational(1, n) + n * pow10(-10L * n);
    o.require(d_sq == Surd(x * x), "closed form at n = " + std::to_string(n));
    o.require(d_sq <= Surd(make_rational(4, static_cast<long>(n) * n)), "(2/n)^2 bound at n = " + std::to_string(n));
    o.require(!previous || d_sq < *previous, "strict decrease at n = " + std::to_string(n));
    previous = d_sq;
  }
  o.require(hausdorff_convergence(y, 20).passed(), "hausdorff report verdict");
  return o;
}

Outcome classification() {
  Outcome o;
  const Space y = Space::compact(32);
  const Space x = y.as_bouquet();
  for (int n = 2; n <= 10; ++n) {
    o.require(classify_X(standard_fn(n, x)).word == Word::generator(n), "classify_X(f_" + std::to_string(n) + ")");
  }
  o.require(classify_Y(standard_f(y)).word.is_identity(), "classify_Y(f)");
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto u_letters = testing::random_letters(rng, rng.below(11), 9);
    const auto v_letters = testing::random_letters(rng, rng.below(11), 9);
    const Word u = reduce(u_letters);
    const Word v = reduce(v_letters);
    o.require(u.letters() == testing::fixpoint_reduce(u_letters), "reduction oracle");
    auto both = u_letters;
    both.insert(both.end(), v_letters.begin(), v_letters.end());
    o.require(multiply(u, v).letters() == testing::fixpoint_reduce(both), "product oracle");
    const Loop lu = realize_word(u, x);
    const Loop lv = realize_word(v, x);
    o.require(classify_X(lu).word == u, "round trip " + u.to_string());
    o.require(classify_X(concatenate(lu, lv)).word == multiply(u, v), "homomorphism in X");
    o.require(classify_Y(concatenate(include(lu, y), include(lv, y))).word == multiply(u, v), "homomorphism in Y");
  }
  return o;
}

Outcome isomorphism_evidence() {
  Outcome o;
  const Space y = Space::compact(32);
  const Space x = y.as_bouquet();
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = testing::random_reduced_word(rng, 10, 9);
    const Loop in_y = include(realize_word(w, x), y);
    o.require(classify_Y(in_y).word == w, "classify_Y(j(realize_word(" + w.to_string() + ")))");
    const Loop decorated = decorate(in_y, 9, rng);
    const Loop collapsed = collapse_to_X(decorated);
    o.require(collapsed.space().kind() == SpaceKind::bouquet_x, "collapse lands in X");
    o.require(classify_X(collapsed).word == w, "collapse of decorated " + w.to_string());
  }
  o.require(probe_isomorphism(y, 100, 10, 9, {4, 40}).passed(), "isomorphism probe verdict");
  return o;
}

Outcome nondiscreteness() {
  Outcome o;
  const ProbeReport report = probe_nondiscreteness_Y(Space::compact(32), 32, make_rational(1, 10));
  o.require(report.passed(), "non-discreteness verdict");
  o.require(!report.tables.empty() && report.tables[0].rows.size() == 31, "rows n = 2..32");
  std::optional<Rational> previous;
  for (const auto& row : report.tables.at(0).rows) {
    const Rational d_sq = parse_rational(row.at(1));
    o.require(!previous || d_sq < *previous, "strict decrease at n = " + row.at(0));
    o.require(row.at(3) == "g" + row.at(0), "word of f_" + row.at(0));
    previous = d_sq;
  }
  o.require(previous && *previous < make_rational(1, 100), "last distance below 1/10");
  return o;
}

Outcome discreteness() {
  Outcome o;
  const Space x = Space::bouquet(32);
  const std::vector<Loop> corpus{constant_loop(x), standard_fn(2, x), standard_fn(3, x),
                                 realize_word(Word::parse("g2 g3"), x),
                                 realize_word(Word::parse("g2^2 g5^-1"), x)};
  std::uint64_t seed = 6;
  for (const Loop& loop : corpus) {
    const ProbeReport report = probe_discreteness_X(loop, 100, make_rational(1, 1000), {seed++, 40});
    o.require(report.passed(), "discreteness of " + classify_X(loop).word.to_string());
  }
  return o;
}

Outcome slsc_yet_nondiscrete() {
  Outcome o;
  const Space y = Space::compact(32);
  const ProbeReport slsc = probe_slsc_Y(y, make_rational(1, 4), 50, {7, 40});
  const ProbeReport nondiscrete = probe_nondiscreteness_Y(y, 32, make_rational(1, 10));
  o.require(slsc.passed(), "small loops trivial");
  o.require(nondiscrete.passed(), "non-discreteness");
  const ProbeReport joint = slsc_nondiscrete_report(slsc, nondiscrete);
  o.require(joint.passed(), "joint verdict");
  o.require(joint.claim.find("not discrete") != std::string::npos, "joint claim");
  return o;
}

Outcome determinism() {
  Outcome o;
  const CliResult a = run_cli("demo whitehead --seed 7 --svg acceptance_a.svg");
  const CliResult b = run_cli("demo whitehead --seed 7 --svg acceptance_b.svg");
  o.require(a.exit_code == 0 && b.exit_code == 0, "demo exit status");
  o.require(!a.out.empty() && a.out == b.out, "identical reports");
  const std::string svg_a = read_text("acceptance_a.svg");
  o.require(!svg_a.empty() && svg_a == read_text("acceptance_b.svg"), "identical SVG");
  std::remove("acceptance_a.svg");
  std::remove("acceptance_b.svg");
  return o;
}

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"construction fidelity", 10, construction_fidelity},
      {"Hausdorff convergence", 30, hausdorff_convergence_check},
      {"classification", 30, classification},
      {"isomorphism evidence", 60, isomorphism_evidence},
      {"non-discreteness of pi1(Y)", 60, nondiscreteness},
      {"discreteness evidence for pi1(X)", 60, discreteness},
      {"small loops trivial yet pi1(Y) non-discrete", 60, slsc_yet_nondiscrete},
      {"determinism of demo whitehead --seed 7", 120, determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds > c.budget_seconds) {
      outcome = {false, "over the time budget"};
    }
    failures += outcome.ok ? 0 : 1;
    std::cout << (outcome.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << c.name << " (" << std::fixed
              << std::setprecision(2) << seconds << " s, budget " << std::setprecision(0) << c.budget_seconds
              << " s)" << (outcome.ok ? "" : ": " + outcome.detail) << "\n";
  }
  return failures == 0 ? 0 : 1;
}
