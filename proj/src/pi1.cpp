#include "pi1lab/pi1.hpp"

#include <algorithm>
#include <stdexcept>

namespace pi1lab {

std::string to_string(const HomotopyClass& c) {
  return "[" + c.word.to_string() + "] in pi1(" + to_string(c.space_kind) + ",p)";
}

namespace {

Word word_of_excursions(const Loop& loop) {
  std::vector<Syllable> syllables;
  for (const Excursion& e : decompose(loop)) {
    if (e.component.is_alpha()) {
      throw std::logic_error("alpha excursion in a loop classified in X");
    }
    syllables.push_back({e.component.circle_index(), winding_degree(e, loop.space())});
  }
  return Word::from_syllables(syllables);
}

bool touches_point(const std::vector<Breakpoint>& bps, const Point2& q) {
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const Point2& a = bps[i].point;
    const Point2& b = bps[i + 1].point;
    if (a == q || b == q || (a != b && Segment(a, b).contains(q))) {
      return true;
    }
  }
  return false;
}

}  // namespace

HomotopyClass classify_X(const Loop& loop) {
  if (loop.space().kind() != SpaceKind::bouquet_x) {
    throw std::invalid_argument("classify_X needs a loop in X, got one in " + loop.space().describe());
  }
  return {word_of_excursions(loop), SpaceKind::bouquet_x};
}

int choose_N(const Loop& loop) {
  int last_essential = 1;
  for (const Excursion& e : decompose(loop)) {
    if (e.component.is_alpha()) {
      continue;
    }
    const int n = e.component.circle_index();
    if (n <= last_essential) {
      continue;
    }
    if (touches_point(e.subpath, loop.space().circle(n).apex) || winding_degree(e, loop.space()) != 0) {
      last_essential = n;
    }
  }
  return last_essential + 1;
}

std::string to_string(CollapseStep::Action a) {
  switch (a) {
    case CollapseStep::Action::kept:
      return "kept";
    case CollapseStep::Action::alpha_contraction:
      return "alpha-contraction";
    case CollapseStep::Action::arc_contraction:
      return "arc-contraction";
  }
  return "?";
}

Collapse collapse_with_certificate(const Loop& loop) {
  const int threshold = choose_N(loop);
  const auto& bps = loop.breakpoints();
  std::vector<Breakpoint> out{bps.front()};
  std::vector<CollapseStep> steps;
  std::size_t start = 0;
  for (std::size_t i = 1; i < bps.size(); ++i) {
    if (bps[i].point != base_point()) {
      continue;
    }
    if (i > start + 1) {
      const ComponentId component = component_of(bps[start + 1].point, loop.space());
      CollapseStep::Action action = CollapseStep::Action::kept;
      if (component.is_alpha()) {
        action = CollapseStep::Action::alpha_contraction;
      } else if (component.circle_index() >= threshold) {
        action = CollapseStep::Action::arc_contraction;
      }
      if (action == CollapseStep::Action::kept) {
        out.insert(out.end(), bps.begin() + static_cast<std::ptrdiff_t>(start) + 1,
                   bps.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      } else {
        out.push_back(bps[i]);
      }
      steps.push_back({bps[start].t, bps[i].t, component, action});
    } else {
      out.push_back(bps[i]);
    }
    start = i;
  }
  return {Loop(PLPath(std::move(out)), loop.space().as_bouquet()), threshold, std::move(steps)};
}

Loop collapse_to_X(const Loop& loop) {
  return collapse_with_certificate(loop).loop;
}

HomotopyClass classify_Y(const Loop& loop) {
  if (loop.space().kind() != SpaceKind::compact_y) {
    throw std::invalid_argument("classify_Y needs a loop in Y, got one in " + loop.space().describe());
  }
  return {classify_X(collapse_to_X(loop)).word, SpaceKind::compact_y};
}

HomotopyClass classify(const Loop& loop) {
  return loop.space().kind() == SpaceKind::compact_y ? classify_Y(loop) : classify_X(loop);
}

HomotopyClass induced_map(const HomotopyClass& c) {
  if (c.space_kind != SpaceKind::bouquet_x) {
    throw std::invalid_argument("the inclusion acts on classes in pi1(X,p)");
  }
  return {c.word, SpaceKind::compact_y};
}

namespace {

KeyValues distance_certificate(const SupDistance& d, int digits) {
  return {{"sup_distance_sq", to_string(d.squared)}, {"sup_distance", d.decimal(digits)}};
}

// |dx| + |dy| >= Euclidean length.
Rational taxicab(const Point2& v) {
  return abs(v.x) + abs(v.y);
}

}  // namespace

ProbeReport probe_nondiscreteness_Y(const Space& y, int n_max, const Rational& epsilon,
                                    const ProbeOptions& options) {
  if (y.kind() != SpaceKind::compact_y) {
    throw std::invalid_argument("the non-discreteness probe runs in Y");
  }
  if (n_max < 2 || sgn(epsilon) <= 0) {
    throw std::invalid_argument("non-discreteness probe needs n_max >= 2 and epsilon > 0");
  }
  ProbeReport report;
  report.probe = "nondiscreteness";
  report.claim =
      "essential loops f_n converge uniformly to the inessential loop f, so the path component of "
      "the constant loop is not open and pi1(Y,p) is not discrete";
  report.parameters = {{"profile", y.profile().name},
                       {"n_max", std::to_string(n_max)},
                       {"epsilon", to_string(epsilon)}};

  const Loop f = standard_f(y);
  const HomotopyClass f_class = classify_Y(f);
  report.witnesses.push_back({"f = alpha.updown", f_class.word.to_string(), {}});
  if (!f_class.word.is_identity()) {
    report.fail({"f = alpha.updown", f_class.word.to_string(), {{"expected", "1"}}});
  }

  ReportTable table{"sup_distance(f_n, f)", {"n", "d_sq", "d", "word"}, {}};
  std::optional<Rational> previous;
  Rational last = 0;
  for (int n = 2; n <= n_max; ++n) {
    const Loop fn = standard_fn(n, y);
    const SupDistance d = sup_distance(fn.path(), f.path());
    const Word w = classify_Y(fn).word;
    table.rows.push_back({std::to_string(n), to_string(d.squared), d.decimal(options.digits), w.to_string()});
    if (w.is_identity()) {
      report.fail({"f_" + std::to_string(n), w.to_string(), distance_certificate(d, options.digits)});
    }
    if (previous && !(d.squared < *previous)) {
      auto cert = distance_certificate(d, options.digits);
      cert.emplace_back("previous_sup_distance_sq", to_string(*previous));
      report.fail({"f_" + std::to_string(n) + " (distance did not decrease)", w.to_string(), cert});
    }
    previous = d.squared;
    last = d.squared;
  }
  report.tables.push_back(std::move(table));
  const bool close_enough = last < epsilon * epsilon;
  report.results = {{"f_word", f_class.word.to_string()},
                    {"last_sup_distance", Surd::sqrt(last).to_decimal(options.digits)},
                    {"below_epsilon", close_enough ? "yes" : "no"}};
  if (!close_enough) {
    report.fail({"f_" + std::to_string(n_max),
                 "g" + std::to_string(n_max),
                 {{"sup_distance_sq", to_string(last)},
                  {"epsilon_sq", to_string(Rational(epsilon * epsilon))},
                  {"gap", "distance at n_max is not yet below epsilon; raise n_max"}}});
  }
  return report;
}

Rational stability_radius(const Loop& loop) {
  const int top = std::max(2, max_circle_touched(loop));
  Rational r = make_rational(1, static_cast<long>(top) * top);
  for (int n = 2; n <= top; ++n) {
    Rational clearance = n * loop.space().profile().width(n);
    if (clearance < r) {
      r = clearance;
    }
  }
  return r / 8;
}

namespace {

Rational max_speed(const std::vector<Breakpoint>& bps) {
  Rational best = 0;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    Rational v = taxicab(bps[i + 1].point - bps[i].point) / (bps[i + 1].t - bps[i].t);
    if (v > best) {
      best = v;
    }
  }
  return best;
}

Rational min_rational(const Rational& a, const Rational& b) {
  return a < b ? a : b;
}

// Moves every breakpoint time by less than a quarter of its neighbouring gaps
// and by less than step / (speed + 1), so points move by less than step.
Loop jitter_times(const Loop& loop, const Rational& step, Rng& rng) {
  const auto& bps = loop.breakpoints();
  const Rational speed = max_speed(bps);
  std::vector<std::pair<Rational, Rational>> knots{{Rational(0), Rational(0)}};
  for (std::size_t i = 1; i + 1 < bps.size(); ++i) {
    Rational gap = min_rational(bps[i].t - bps[i - 1].t, bps[i + 1].t - bps[i].t) / 4;
    Rational room = min_rational(gap, step / (speed + 1));
    knots.emplace_back(bps[i].t, bps[i].t + rng.signed_fraction() * room);
  }
  knots.emplace_back(Rational(1), Rational(1));
  return reparametrize(loop, knots);
}

// Slides breakpoints lying inside a single edge along that edge.
Loop slide_points(const Loop& loop, const Rational& step, Rng& rng) {
  std::vector<Breakpoint> bps = loop.breakpoints();
  for (std::size_t i = 1; i + 1 < bps.size(); ++i) {
    if (rng.below(3) == 0) {
      continue;
    }
    const std::vector<EdgeRef> carriers = loop.space().edges_containing(bps[i].point);
    if (carriers.size() != 1) {
      continue;
    }
    const Segment& e = loop.space().edge(carriers.front());
    const Rational lambda = e.parameter_of(bps[i].point);
    if (sgn(lambda) == 0 || lambda == 1) {
      continue;
    }
    Rational moved = lambda + rng.signed_fraction() * step / taxicab(e.direction());
    if (sgn(moved) > 0 && moved < 1) {
      bps[i].point = e.at(moved);
    }
  }
  return Loop(PLPath(std::move(bps)), loop.space());
}

EdgeRef random_base_edge(const Space& space, Rng& rng) {
  if (space.has_alpha() && rng.below(4) == 0) {
    return EdgeRef{};
  }
  return EdgeRef{2 + rng.below(space.max_index() - 1), rng.coin() ? 0 : 2};
}

const Point2& far_end(const EdgeRef& edge, const Space& space) {
  const Segment& s = space.edge(edge);
  return s.a() == base_point() ? s.b() : s.a();
}

// Inserts short there-and-back spurs right after breakpoints at p.
Loop add_spurs(const Loop& loop, const Rational& step, Rng& rng) {
  std::vector<Breakpoint> bps = loop.breakpoints();
  std::vector<std::size_t> at_base;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    if (bps[i].point == base_point()) {
      at_base.push_back(i);
    }
  }
  std::vector<std::size_t> chosen;
  const int count = rng.below(3);
  for (int k = 0; k < count && !at_base.empty(); ++k) {
    std::size_t j = static_cast<std::size_t>(rng.below(static_cast<int>(at_base.size())));
    chosen.push_back(at_base[j]);
    at_base.erase(at_base.begin() + static_cast<std::ptrdiff_t>(j));
  }
  std::sort(chosen.rbegin(), chosen.rend());
  for (std::size_t i : chosen) {
    const Rational gap = bps[i + 1].t - bps[i].t;
    const Rational speed = taxicab(bps[i + 1].point - bps[i].point) / gap;
    const Rational h = min_rational(gap / 4, step / (speed + 1));
    const EdgeRef edge = random_base_edge(loop.space(), rng);
    const Point2& v = far_end(edge, loop.space());
    const Point2 tip = (rng.unit_fraction() * step / taxicab(v)) * v;
    const Rational t = bps[i].t;
    bps.insert(bps.begin() + static_cast<std::ptrdiff_t>(i) + 1,
               {Breakpoint{t + h, tip}, Breakpoint{t + 2 * h, base_point()}});
  }
  return Loop(PLPath(std::move(bps)), loop.space());
}

}  // namespace

Loop perturb_loop(const Loop& loop, const Rational& bound, Rng& rng) {
  if (sgn(bound) <= 0) {
    throw std::invalid_argument("perturbation bound must be positive");
  }
  // jitter < step, slides < step, spurs < 3 step.
  const Rational step = bound / 8;
  Loop out = jitter_times(loop, step, rng);
  out = slide_points(out, step, rng);
  return add_spurs(out, step, rng);
}

ProbeReport probe_discreteness_X(const Loop& loop, int trials, const Rational& magnitude,
                                 const ProbeOptions& options) {
  if (loop.space().kind() != SpaceKind::bouquet_x) {
    throw std::invalid_argument("the discreteness probe runs in X");
  }
  if (trials < 1 || sgn(magnitude) <= 0) {
    throw std::invalid_argument("discreteness probe needs trials >= 1 and magnitude > 0");
  }
  const Rational radius = stability_radius(loop);
  const Rational bound = min_rational(magnitude, radius);
  const Word word = classify_X(loop).word;

  ProbeReport report;
  report.probe = "discreteness";
  report.claim = "loops within the stability radius of the given loop share its class in pi1(X,p)";
  report.parameters = {{"profile", loop.space().profile().name},
                       {"loop", loop.describe()},
                       {"trials", std::to_string(trials)},
                       {"seed", std::to_string(options.seed)},
                       {"magnitude", to_string(magnitude)},
                       {"stability_radius", to_string(radius)},
                       {"effective_bound", to_string(bound)}};
  if (magnitude > radius) {
    report.notes.push_back("magnitude exceeds the stability radius; perturbations are capped at the radius");
  }
  report.witnesses.push_back({"original", word.to_string(), {}});

  Rng rng(options.seed);
  int agreeing = 0;
  Rational worst = 0;
  for (int k = 0; k < trials; ++k) {
    Loop candidate = perturb_loop(loop, bound, rng);
    const SupDistance d = sup_distance(candidate.path(), loop.path());
    const Word w = classify_X(candidate).word;
    if (d.squared > worst) {
      worst = d.squared;
    }
    if (!(d.squared < bound * bound)) {
      report.fail({"trial " + std::to_string(k) + ": " + candidate.describe(),
                   w.to_string(),
                   {{"sup_distance_sq", to_string(d.squared)}, {"problem", "perturbation exceeds bound"}}});
      continue;
    }
    if (w != word) {
      report.fail({"trial " + std::to_string(k) + ": " + candidate.describe(),
                   w.to_string(),
                   {{"sup_distance_sq", to_string(d.squared)}, {"expected_word", word.to_string()}}});
      continue;
    }
    ++agreeing;
  }
  report.results = {{"word", word.to_string()},
                    {"agreeing_trials", std::to_string(agreeing) + "/" + std::to_string(trials)},
                    {"max_sup_distance_sq", to_string(worst)},
                    {"max_sup_distance", Surd::sqrt(worst).to_decimal(options.digits)}};
  return report;
}

bool within_ball(const Loop& loop, const Rational& radius) {
  const Rational r2 = radius * radius;
  return std::all_of(loop.breakpoints().begin(), loop.breakpoints().end(),
                     [&r2](const Breakpoint& b) { return norm_sq(b.point) <= r2; });
}

Loop sample_small_loop(const Space& y, const Rational& radius, Rng& rng) {
  std::vector<Point2> points{base_point()};
  const int excursions = 1 + rng.below(4);
  for (int k = 0; k < excursions; ++k) {
    const EdgeRef edge = random_base_edge(y, rng);
    const Point2& v = far_end(edge, y);
    const Rational reach = min_rational(Rational(1), radius / taxicab(v));
    const int wiggles = 1 + rng.below(4);
    for (int j = 0; j < wiggles; ++j) {
      Point2 q = (reach * rng.unit_fraction()) * v;
      if (q != points.back()) {
        points.push_back(std::move(q));
      }
    }
    points.push_back(base_point());
    if (rng.below(4) == 0) {
      points.push_back(base_point());
    }
  }
  std::vector<Breakpoint> bps;
  const long last = static_cast<long>(points.size()) - 1;
  for (long i = 0; i <= last; ++i) {
    bps.push_back({make_rational(i, last), points[static_cast<std::size_t>(i)]});
  }
  return Loop(PLPath(std::move(bps)), y);
}

SmallLoopCheck check_small_loop(const Loop& loop, const Rational& radius) {
  if (!within_ball(loop, radius)) {
    return {};
  }
  return {true, classify(loop)};
}

ProbeReport probe_slsc_Y(const Space& y, const Rational& radius, int samples, const ProbeOptions& options) {
  if (y.kind() != SpaceKind::compact_y) {
    throw std::invalid_argument("the SLSC probe runs in Y");
  }
  if (sgn(radius) <= 0 || radius >= make_rational(1, 2)) {
    throw std::invalid_argument("SLSC probe needs 0 < radius < 1/2");
  }
  if (samples < 1) {
    throw std::invalid_argument("SLSC probe needs at least one sample");
  }
  ProbeReport report;
  report.probe = "slsc";
  report.claim = "every loop in the closed ball of the given radius about p is trivial in pi1(Y,p)";
  report.parameters = {{"profile", y.profile().name},
                       {"radius", to_string(radius)},
                       {"samples", std::to_string(samples)},
                       {"seed", std::to_string(options.seed)}};
  Rng rng(options.seed);
  int trivial = 0;
  for (int k = 0; k < samples; ++k) {
    const Loop sample = k == 0 ? constant_loop(y) : sample_small_loop(y, radius, rng);
    const SmallLoopCheck check = check_small_loop(sample, radius);
    std::string components;
    for (const Excursion& e : decompose(sample)) {
      components += (components.empty() ? "" : " ") + e.component.to_string();
    }
    const std::string label = "sample " + std::to_string(k) + " [" + components + "]";
    if (!check.in_ball) {
      report.fail({label, "", {{"problem", "sample leaves the ball"}}});
      continue;
    }
    const Word& w = check.homotopy_class->word;
    if (!w.is_identity()) {
      report.fail({label + ": " + sample.describe(), w.to_string(), {}});
      continue;
    }
    ++trivial;
    report.witnesses.push_back({label, w.to_string(), {}});
  }
  report.results = {{"trivial_samples", std::to_string(trivial) + "/" + std::to_string(samples)}};
  report.notes.push_back(
      "with the nondiscreteness probe this shows Y is semilocally simply connected at p while "
      "pi1(Y,p) is not discrete");
  return report;
}

ProbeReport slsc_nondiscrete_report(const ProbeReport& slsc, const ProbeReport& nondiscreteness) {
  ProbeReport report;
  report.probe = "slsc_nondiscrete";
  report.claim =
      "Y is semilocally simply connected at p, yet pi1(Y,p) is not discrete; so discreteness is not "
      "equivalent to semilocal simple connectivity without local path connectivity";
  report.results = {{"slsc", to_string(slsc.verdict)}, {"nondiscreteness", to_string(nondiscreteness.verdict)}};
  if (!slsc.passed()) {
    report.fail({"probe slsc", "", {{"verdict", "FAIL"}}});
  }
  if (!nondiscreteness.passed()) {
    report.fail({"probe nondiscreteness", "", {{"verdict", "FAIL"}}});
  }
  return report;
}

Loop spur_loop(const EdgeRef& edge, const Rational& lambda, const Space& space) {
  if (!edge.touches_base()) {
    throw std::invalid_argument("spur edges must start at p");
  }
  if (sgn(lambda) <= 0 || lambda > 1) {
    throw std::invalid_argument("spur length fraction must lie in (0,1]");
  }
  const Point2 tip = lambda * far_end(edge, space);
  return Loop(PLPath({{Rational(0), base_point()}, {make_rational(1, 2), tip}, {Rational(1), base_point()}}),
              space);
}

Loop decorate(const Loop& loop, int max_generator, Rng& rng) {
  const Space y = loop.space().as_compact();
  const Loop base = include(loop, y);
  std::vector<Loop> parts;
  auto sprinkle = [&] {
    const int extras = rng.below(3);
    for (int k = 0; k < extras; ++k) {
      if (max_generator < y.max_index() && rng.coin()) {
        const int n = max_generator + 1 + rng.below(y.max_index() - max_generator);
        // Stays below B_n, so the spur is inessential and misses the apex.
        const Rational lambda = rng.unit_fraction() / 2;
        parts.push_back(spur_loop(EdgeRef{n, rng.coin() ? 0 : 2}, lambda, y));
      } else {
        parts.push_back(standard_f(y));
      }
    }
  };
  sprinkle();
  for (const Loop& piece : split_at_base(base)) {
    parts.push_back(piece);
    sprinkle();
  }
  if (parts.empty()) {
    parts.push_back(constant_loop(y));
  }
  return concatenate_all(parts);
}

ProbeReport probe_isomorphism(const Space& y, int words, int max_length, int max_generator,
                              const ProbeOptions& options) {
  if (y.kind() != SpaceKind::compact_y) {
    throw std::invalid_argument("the isomorphism probe runs in Y");
  }
  if (max_generator < 2 || max_generator > y.max_index()) {
    throw std::invalid_argument("max generator must lie in [2, max index of the space]");
  }
  const Space x = y.as_bouquet();
  ProbeReport report;
  report.probe = "isomorphism";
  report.claim =
      "the inclusion j: X -> Y induces a bijection on classes: classify_Y(j(realize_word(w))) = w, "
      "and collapsing alpha-decorated loops returns loops in X with the same word";
  report.parameters = {{"profile", y.profile().name},
                       {"words", std::to_string(words)},
                       {"max_length", std::to_string(max_length)},
                       {"generators", "g2..g" + std::to_string(max_generator)},
                       {"seed", std::to_string(options.seed)}};
  Rng rng(options.seed);
  int round_trips = 0;
  int decorated_ok = 0;
  for (int k = 0; k < words; ++k) {
    std::vector<Letter> letters;
    const int length = rng.below(max_length + 1);
    for (int i = 0; i < length; ++i) {
      letters.push_back({2 + rng.below(max_generator - 1), rng.coin() ? 1 : -1});
    }
    const Word w = reduce(letters);
    const Loop in_x = realize_word(w, x);
    const HomotopyClass image = induced_map(classify_X(in_x));
    const HomotopyClass in_y = classify_Y(include(in_x, y));
    if (in_y != image || image.word != w) {
      report.fail({"realize_word(" + w.to_string() + ")", in_y.word.to_string(), {{"expected", w.to_string()}}});
    } else {
      ++round_trips;
    }
    const Loop decorated = decorate(in_x, max_generator, rng);
    const Loop collapsed = collapse_to_X(decorated);
    const Word collapsed_word = classify_X(collapsed).word;
    if (collapsed_word != w || classify_Y(decorated).word != w) {
      report.fail({"decorated realize_word(" + w.to_string() + "): " + decorated.describe(),
                   collapsed_word.to_string(),
                   {{"expected", w.to_string()}}});
    } else {
      ++decorated_ok;
    }
    if (k < 5) {
      report.witnesses.push_back({"realize_word(" + w.to_string() + ")", in_y.word.to_string(),
                                  {{"decorated_excursions", std::to_string(decompose(decorated).size())},
                                   {"collapsed_word", collapsed_word.to_string()}}});
    }
  }
  report.results = {{"round_trips", std::to_string(round_trips) + "/" + std::to_string(words)},
                    {"decorated_collapses", std::to_string(decorated_ok) + "/" + std::to_string(words)}};
  return report;
}

}  // namespace pi1lab
