#include "pi1lab/runner.hpp"

#include "pi1lab/pi1.hpp"
#include "pi1lab/svg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <ostream>
#include <stdexcept>

namespace pi1lab {

namespace {

// A runtime failure tied to a script line.
class StatementError : public std::runtime_error {
 public:
  StatementError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message) {}
};

struct ActiveSection {
  Space space;
  std::map<std::string, Loop, std::less<>> loops;
};

Loop build_loop_in(const dsl::LoopExpr& expr, const Space& space,
                   const std::map<std::string, Loop, std::less<>>* bound) {
  using Kind = dsl::LoopExpr::Kind;
  switch (expr.kind) {
    case Kind::alpha_updown:
      return standard_f(space);
    case Kind::circle_once:
      return standard_fn(expr.circle, space);
    case Kind::circle_inv:
      return reverse(standard_fn(expr.circle, space));
    case Kind::concat: {
      std::vector<Loop> parts;
      for (const std::string& name : expr.names) {
        if (bound == nullptr || bound->count(name) == 0) {
          throw std::invalid_argument("unbound name '" + name + "'");
        }
        parts.push_back(bound->find(name)->second);
      }
      return concatenate_all(parts);
    }
    case Kind::word:
      return realize_word(expr.word, space);
    case Kind::points:
      return Loop(PLPath(expr.points), space);
  }
  throw std::logic_error("unhandled loop expression");
}

long int_arg(const dsl::ProbeStmt& probe, std::size_t i) {
  return std::get<long>(probe.args.at(i));
}

const Rational& rational_arg(const dsl::ProbeStmt& probe, std::size_t i) {
  return std::get<Rational>(probe.args.at(i));
}

const std::string& name_arg(const dsl::ProbeStmt& probe, std::size_t i) {
  return std::get<std::string>(probe.args.at(i));
}

int narrow(long value, const char* what) {
  if (value > 1'000'000) {
    throw std::invalid_argument(std::string(what) + " " + std::to_string(value) + " is too large");
  }
  return static_cast<int>(value);
}

class Emitter {
 public:
  explicit Emitter(std::ostream& out) : out_(out) {}

  void emit(const ProbeReport& report) {
    out_ << (first_ ? "" : "\n") << serialize(report);
    first_ = false;
    any_fail_ = any_fail_ || !report.passed();
  }

  int exit_code() const { return any_fail_ ? kExitFail : kExitPass; }

 private:
  std::ostream& out_;
  bool first_ = true;
  bool any_fail_ = false;
};

void run_probe(const dsl::ProbeStmt& probe, const ActiveSection& section, const RunOptions& options,
               Emitter& emitter) {
  const Space& space = section.space;
  const ProbeOptions probe_options{probe.seed.value_or(options.seed), options.digits};
  const std::string& kind = probe.kind;
  auto loop = [&](std::size_t i) -> const Loop& { return section.loops.at(name_arg(probe, i)); };

  if (kind == "classify") {
    emitter.emit(classify_report(name_arg(probe, 0), loop(0)));
  } else if (kind == "dist") {
    emitter.emit(dist_report(name_arg(probe, 0), loop(0), name_arg(probe, 1), loop(1), options.digits));
  } else if (kind == "disjointness") {
    emitter.emit(verify_disjointness(space, narrow(int_arg(probe, 0), "up_to")));
  } else if (kind == "hausdorff") {
    emitter.emit(hausdorff_convergence(space, narrow(int_arg(probe, 0), "up_to"), options.digits));
  } else if (kind == "nondiscrete") {
    emitter.emit(probe_nondiscreteness_Y(space, narrow(int_arg(probe, 0), "n_max"), rational_arg(probe, 1),
                                         probe_options));
  } else if (kind == "discrete") {
    emitter.emit(probe_discreteness_X(loop(0), narrow(int_arg(probe, 1), "trials"), rational_arg(probe, 2),
                                      probe_options));
  } else if (kind == "slsc") {
    emitter.emit(probe_slsc_Y(space, rational_arg(probe, 0), narrow(int_arg(probe, 1), "samples"), probe_options));
  } else if (kind == "slsc_nondiscrete") {
    const ProbeReport slsc =
        probe_slsc_Y(space, rational_arg(probe, 0), narrow(int_arg(probe, 1), "samples"), probe_options);
    const ProbeReport nondiscrete = probe_nondiscreteness_Y(space, narrow(int_arg(probe, 2), "n_max"),
                                                            rational_arg(probe, 3), probe_options);
    emitter.emit(slsc);
    emitter.emit(nondiscrete);
    emitter.emit(slsc_nondiscrete_report(slsc, nondiscrete));
  } else if (kind == "isomorphism") {
    emitter.emit(probe_isomorphism(space, narrow(int_arg(probe, 0), "words"), narrow(int_arg(probe, 1), "max_length"),
                                   narrow(int_arg(probe, 2), "max_generator"), probe_options));
  } else {
    throw std::logic_error("unknown probe kind '" + kind + "'");
  }
}

SvgScene scene_for(const dsl::RenderStmt& render, const ActiveSection& section) {
  SvgScene scene{section.space, {}};
  for (const std::string& name : render.names) {
    scene.loops.push_back({name, section.loops.at(name)});
  }
  return scene;
}

}  // namespace

Space build_space(const dsl::SpaceDecl& decl) {
  WidthProfile profile = WidthProfile::by_name(decl.width);
  return decl.kind == SpaceKind::bouquet_x ? Space::bouquet(decl.max_hint, std::move(profile))
                                           : Space::compact(decl.max_hint, std::move(profile));
}

Loop build_loop(const dsl::LoopExpr& expr, const Space& space) {
  return build_loop_in(expr, space, nullptr);
}

ProbeReport classify_report(const std::string& name, const Loop& loop) {
  ProbeReport report;
  report.probe = "classify";
  report.claim = "the class of " + name + " in pi1(" + to_string(loop.space().kind()) +
                 ",p) is the reduced word below";
  report.parameters = {{"loop", name}, {"space", loop.space().describe()}};
  const HomotopyClass c = classify(loop);
  report.results = {{"word", c.word.to_string()}, {"class", to_string(c)}};
  if (loop.space().has_alpha()) {
    const Collapse collapse = collapse_with_certificate(loop);
    report.results.emplace_back("collapse_threshold", std::to_string(collapse.threshold));
    ReportTable table{"collapse", {"t_start", "t_end", "component", "action"}, {}};
    for (const CollapseStep& s : collapse.steps) {
      table.rows.push_back({to_string(s.t_start), to_string(s.t_end), s.component.to_string(), to_string(s.action)});
    }
    report.tables.push_back(std::move(table));
  }
  return report;
}

ProbeReport dist_report(const std::string& a, const Loop& f, const std::string& b, const Loop& g, int digits) {
  ProbeReport report;
  report.probe = "dist";
  report.claim = "exact sup-distance between " + a + " and " + b;
  report.parameters = {{"loops", a + ", " + b}, {"digits", std::to_string(digits)}};
  const SupDistance d = sup_distance(f.path(), g.path());
  report.results = {{"sup_distance_sq", to_string(d.squared)},
                    {"sup_distance", d.decimal(digits)},
                    {"attained_at", to_string(d.attained_at)}};
  return report;
}

int run_script(const dsl::Script& script, const RunOptions& options, std::ostream& out, std::ostream& err) {
  Emitter emitter(out);
  std::optional<ActiveSection> section;
  int line = 0;
  try {
    for (const dsl::Statement& st : script.statements) {
      line = st.line;
      if (const auto* space = std::get_if<dsl::SpaceDecl>(&st.node)) {
        section = ActiveSection{build_space(*space), {}};
        continue;
      }
      if (!section) {
        throw std::invalid_argument("no active space");
      }
      if (const auto* decl = std::get_if<dsl::LoopDecl>(&st.node)) {
        section->loops.insert_or_assign(decl->name, build_loop_in(decl->expr, section->space, &section->loops));
      } else if (const auto* probe = std::get_if<dsl::ProbeStmt>(&st.node)) {
        if (options.run_probes) {
          run_probe(*probe, *section, options, emitter);
        }
      } else if (const auto* render = std::get_if<dsl::RenderStmt>(&st.node)) {
        if (options.run_renders) {
          write_svg(scene_for(*render, *section), render->path);
        }
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << StatementError(line, e.what()).what() << "\n";
    return kExitError;
  }
  return emitter.exit_code();
}

int run_text(std::string_view text, const RunOptions& options, std::ostream& out, std::ostream& err) {
  dsl::Script script;
  try {
    script = dsl::parse(text);
  } catch (const dsl::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return run_script(script, options, out, err);
}

int run_whitehead_demo(const DemoOptions& options, std::ostream& out, std::ostream& err) {
  Emitter emitter(out);
  try {
    if (options.n_max < 2) {
      throw std::invalid_argument("--nmax must be at least 2");
    }
    const Space y = Space::compact(std::max(options.n_max, 20));
    const Space x = y.as_bouquet();
    std::uint64_t seed = options.seed;
    auto next_options = [&] { return ProbeOptions{seed++, options.digits}; };

    std::vector<std::pair<std::string, Verdict>> steps;
    auto record = [&](const std::string& step, const ProbeReport& report) {
      emitter.emit(report);
      steps.emplace_back(step, report.verdict);
    };

    record("disjointness", verify_disjointness(y, 20));
    record("hausdorff", hausdorff_convergence(y, 20, options.digits));
    record("isomorphism", probe_isomorphism(y, 100, 10, 9, next_options()));
    const ProbeReport nondiscrete = probe_nondiscreteness_Y(y, options.n_max, make_rational(1, 10), next_options());
    record("nondiscrete", nondiscrete);

    const std::vector<std::pair<std::string, Loop>> corpus{
        {"constant", constant_loop(x)},
        {"f2", standard_fn(2, x)},
        {"f3", standard_fn(3, x)},
        {"g2 g3", realize_word(Word::parse("g2 g3"), x)},
        {"g2^2 g5^-1", realize_word(Word::parse("g2^2 g5^-1"), x)},
    };
    for (const auto& [name, loop] : corpus) {
      record("discrete " + name, probe_discreteness_X(loop, 100, make_rational(1, 1000), next_options()));
    }
    const ProbeReport slsc = probe_slsc_Y(y, make_rational(1, 4), 50, next_options());
    record("slsc", slsc);
    record("slsc_nondiscrete", slsc_nondiscrete_report(slsc, nondiscrete));

    ProbeReport summary;
    summary.probe = "whitehead";
    summary.claim = "the topological fundamental groups π₁(X,p) and π₁(Y,p) are not homeomorphic";
    summary.parameters = {{"space", y.describe()},
                          {"n_max", std::to_string(options.n_max)},
                          {"seed", std::to_string(options.seed)}};
    std::vector<std::string> failed;
    for (const auto& [step, verdict] : steps) {
      summary.results.emplace_back(step, to_string(verdict));
      if (verdict == Verdict::fail) {
        failed.push_back(step);
      }
    }
    summary.notes.push_back(
        "pi1(X,p) and pi1(Y,p) are isomorphic as groups via j, pi1(X,p) is discrete and pi1(Y,p) is not");
    if (!failed.empty()) {
      std::string list;
      for (const std::string& s : failed) {
        list += (list.empty() ? "" : ", ") + s;
      }
      summary.fail({"failed steps", "", {{"steps", list}}});
    }
    emitter.emit(summary);

    const Space y8 = Space::compact(8);
    write_svg({y8, {{"f", standard_f(y8)}, {"f5", standard_fn(5, y8)}}}, options.svg_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return emitter.exit_code();
}

int digits_from_env() {
  const char* raw = std::getenv("PI1LAB_DIGITS");
  if (raw == nullptr || *raw == '\0') {
    return 40;
  }
  const std::string text(raw);
  if (text.size() > 4 || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("PI1LAB_DIGITS must be an integer in [1, 1000], got '" + text + "'");
  }
  const int digits = std::stoi(text);
  if (digits < 1 || digits > 1000) {
    throw std::invalid_argument("PI1LAB_DIGITS must be an integer in [1, 1000], got '" + text + "'");
  }
  return digits;
}

}  // namespace pi1lab
