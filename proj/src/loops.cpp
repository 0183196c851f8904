#include "pi1lab/loops.hpp"

#include <algorithm>

namespace pi1lab {

std::string to_string(const Violation& v) {
  return v.reason + " (t in [" + to_string(v.t_begin) + ", " + to_string(v.t_end) + "])";
}

LoopError::LoopError(Violation v) : std::invalid_argument(to_string(v)), violation_(std::move(v)) {}

namespace {

bool shares_edge(const std::vector<EdgeRef>& a, const std::vector<EdgeRef>& b) {
  return std::any_of(a.begin(), a.end(), [&b](const EdgeRef& e) {
    return std::find(b.begin(), b.end(), e) != b.end();
  });
}

bool has_base_edge(const std::vector<EdgeRef>& edges) {
  return std::any_of(edges.begin(), edges.end(), [](const EdgeRef& e) { return e.touches_base(); });
}

}  // namespace

std::optional<Violation> validate(const PLPath& path, const Space& space) {
  const auto& bps = path.breakpoints();
  if (bps.front().point != base_point()) {
    return Violation{"loop does not start at p", bps.front().t, bps.front().t};
  }
  if (bps.back().point != base_point()) {
    return Violation{"loop does not end at p", bps.back().t, bps.back().t};
  }
  std::vector<std::vector<EdgeRef>> carriers;
  carriers.reserve(bps.size());
  for (const auto& b : bps) {
    carriers.push_back(space.edges_containing(b.point));
    if (b.point != base_point() && carriers.back().empty()) {
      return Violation{"breakpoint " + to_string(b.point) + " lies outside " + space.describe(), b.t,
                       b.t};
    }
  }
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const Point2& a = bps[i].point;
    const Point2& b = bps[i + 1].point;
    if (a == b) {
      continue;
    }
    bool ok = a == base_point()   ? has_base_edge(carriers[i + 1])
              : b == base_point() ? has_base_edge(carriers[i])
                                  : shares_edge(carriers[i], carriers[i + 1]);
    if (!ok) {
      return Violation{"piece " + to_string(a) + " -> " + to_string(b) + " is not inside one edge of " +
                           space.describe(),
                       bps[i].t, bps[i + 1].t};
    }
  }
  return std::nullopt;
}

Loop::Loop(PLPath path, Space space) : path_(std::move(path)), space_(std::move(space)) {
  if (auto v = pi1lab::validate(path_, space_)) {
    throw LoopError(std::move(*v));
  }
}

std::string Loop::describe() const {
  std::string out = "points [";
  bool first = true;
  for (const auto& b : breakpoints()) {
    if (!first) {
      out += ", ";
    }
    first = false;
    out += "(" + to_string(b.t) + "," + to_string(b.point.x) + "," + to_string(b.point.y) + ")";
  }
  return out + "]";
}

std::optional<Violation> validate(const Loop& loop) {
  return validate(loop.path(), loop.space());
}

std::optional<EdgeRef> carrier_edge(const Point2& a, const Point2& b, const Space& space) {
  if (a == b) {
    return std::nullopt;
  }
  const Point2& probe = a == base_point() ? b : a;
  const Point2& other = a == base_point() ? a : b;
  for (const EdgeRef& e : space.edges_containing(probe)) {
    if (space.edge(e).contains(other)) {
      return e;
    }
  }
  return std::nullopt;
}

std::vector<Excursion> decompose(const Loop& loop) {
  const auto& bps = loop.breakpoints();
  std::vector<Excursion> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i < bps.size(); ++i) {
    if (bps[i].point != base_point()) {
      continue;
    }
    if (i > start + 1) {
      const Point2& inside = bps[start + 1].point;
      out.push_back(Excursion{bps[start].t, bps[i].t, component_of(inside, loop.space()),
                              std::vector<Breakpoint>(bps.begin() + static_cast<std::ptrdiff_t>(start),
                                                      bps.begin() + static_cast<std::ptrdiff_t>(i) + 1)});
    }
    start = i;
  }
  return out;
}

std::int64_t winding_degree(const Excursion& excursion, const Space& space) {
  if (excursion.component.is_alpha()) {
    throw std::invalid_argument("winding degree is undefined for an alpha excursion");
  }
  const Circle& c = space.circle(excursion.component.circle_index());
  Rational total = 0;
  const auto& bps = excursion.subpath;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const Point2& a = bps[i].point;
    const Point2& b = bps[i + 1].point;
    if (a == b) {
      continue;
    }
    bool found = false;
    for (const Segment& e : c.edges) {
      if (e.contains(a) && e.contains(b)) {
        total += e.parameter_of(b) - e.parameter_of(a);
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::logic_error("excursion piece leaves " + excursion.component.to_string());
    }
  }
  Rational turns = total / 3;
  if (turns.get_den() != 1) {
    throw std::logic_error("excursion does not close up on its circle");
  }
  return turns.get_num().get_si();
}

Loop constant_loop(const Space& space) {
  return Loop(PLPath({{Rational(0), base_point()}, {Rational(1), base_point()}}), space);
}

Loop standard_f(const Space& space) {
  if (!space.has_alpha()) {
    throw std::invalid_argument("the loop f runs along alpha, which is not part of X");
  }
  return Loop(PLPath({{Rational(0), base_point()},
                      {make_rational(1, 2), Point2{Rational(0), Rational(1)}},
                      {Rational(1), base_point()}}),
              space);
}

Rational far_vertex_time(int n, const Space& space) {
  return (1 + space.profile().width(n)) / 2;
}

namespace {

void check_index(int n, const Space& space) {
  if (n < 2) {
    throw std::invalid_argument("circle index must be >= 2, got " + std::to_string(n));
  }
  if (n > space.max_index()) {
    throw std::invalid_argument("circle index " + std::to_string(n) + " exceeds the max index of " +
                                space.describe());
  }
}

// One traversal of C_n over [start, start + span], omitting the final p.
void append_traversal(std::vector<Breakpoint>& out, int n, int sign, const Rational& start,
                      const Rational& span, const Space& space) {
  const Circle& c = space.circle(n);
  const Rational far_time = far_vertex_time(n, space);
  out.push_back({start, base_point()});
  if (sign > 0) {
    out.push_back({start + span / 2, c.apex});
    out.push_back({start + span * far_time, c.far});
  } else {
    out.push_back({start + span * (1 - far_time), c.far});
    out.push_back({start + span / 2, c.apex});
  }
}

}  // namespace

Loop standard_fn(int n, const Space& space) {
  return realize_word(Word::generator(n), space);
}

Loop concatenate(const Loop& a, const Loop& b) {
  if (!(a.space() == b.space())) {
    throw std::invalid_argument("cannot concatenate loops in " + a.space().describe() + " and " +
                                b.space().describe());
  }
  const Rational half = make_rational(1, 2);
  std::vector<Breakpoint> bps;
  bps.reserve(a.breakpoints().size() + b.breakpoints().size() - 1);
  for (const auto& bp : a.breakpoints()) {
    bps.push_back({bp.t * half, bp.point});
  }
  for (std::size_t i = 1; i < b.breakpoints().size(); ++i) {
    const auto& bp = b.breakpoints()[i];
    bps.push_back({half + bp.t * half, bp.point});
  }
  return Loop(PLPath(std::move(bps)), a.space());
}

Loop concatenate_all(std::span<const Loop> loops) {
  if (loops.empty()) {
    throw std::invalid_argument("nothing to concatenate");
  }
  const Rational span = make_rational(1, static_cast<long>(loops.size()));
  std::vector<Breakpoint> bps{{Rational(0), base_point()}};
  for (std::size_t k = 0; k < loops.size(); ++k) {
    if (!(loops[k].space() == loops.front().space())) {
      throw std::invalid_argument("cannot concatenate loops in " + loops.front().space().describe() +
                                  " and " + loops[k].space().describe());
    }
    const Rational start = span * static_cast<long>(k);
    const auto& part = loops[k].breakpoints();
    for (std::size_t i = 1; i < part.size(); ++i) {
      bps.push_back({start + part[i].t * span, part[i].point});
    }
  }
  return Loop(PLPath(std::move(bps)), loops.front().space());
}

std::vector<Loop> split_at_base(const Loop& loop) {
  std::vector<Loop> out;
  for (const Excursion& e : decompose(loop)) {
    const Rational length = e.t_end - e.t_start;
    std::vector<Breakpoint> bps;
    bps.reserve(e.subpath.size());
    for (const auto& b : e.subpath) {
      bps.push_back({(b.t - e.t_start) / length, b.point});
    }
    out.emplace_back(PLPath(std::move(bps)), loop.space());
  }
  return out;
}

Loop reverse(const Loop& a) {
  std::vector<Breakpoint> bps;
  bps.reserve(a.breakpoints().size());
  for (auto it = a.breakpoints().rbegin(); it != a.breakpoints().rend(); ++it) {
    bps.push_back({1 - it->t, it->point});
  }
  return Loop(PLPath(std::move(bps)), a.space());
}

Loop realize_word(const Word& w, const Space& space) {
  const std::vector<Letter> letters = w.letters();
  if (letters.empty()) {
    return constant_loop(space);
  }
  const Rational span = make_rational(1, static_cast<long>(letters.size()));
  std::vector<Breakpoint> bps;
  bps.reserve(3 * letters.size() + 1);
  for (std::size_t k = 0; k < letters.size(); ++k) {
    check_index(letters[k].generator, space);
    append_traversal(bps, letters[k].generator, letters[k].sign, span * static_cast<long>(k), span,
                     space);
  }
  bps.push_back({Rational(1), base_point()});
  return Loop(PLPath(std::move(bps)), space);
}

Loop include(const Loop& loop, const Space& target) {
  if (!loop.space().same_family(target)) {
    throw std::invalid_argument("inclusion needs spaces built over the same circle family");
  }
  return Loop(loop.path(), target);
}

Loop reparametrize(const Loop& loop, std::span<const std::pair<Rational, Rational>> knots) {
  if (knots.size() < 2 || knots.front() != std::pair<Rational, Rational>(0, 0) ||
      knots.back() != std::pair<Rational, Rational>(1, 1)) {
    throw std::invalid_argument("reparametrization must fix 0 and 1");
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i - 1].first < knots[i].first) || !(knots[i - 1].second < knots[i].second)) {
      throw std::invalid_argument("reparametrization knots must be strictly increasing");
    }
  }
  auto phi = [&knots](const Rational& s) {
    auto hi = std::lower_bound(knots.begin(), knots.end(), s,
                               [](const auto& k, const Rational& v) { return k.first < v; });
    if (hi->first == s) {
      return hi->second;
    }
    auto lo = std::prev(hi);
    return Rational(lo->second + (s - lo->first) / (hi->first - lo->first) * (hi->second - lo->second));
  };
  auto phi_inverse = [&knots](const Rational& t) {
    auto hi = std::lower_bound(knots.begin(), knots.end(), t,
                               [](const auto& k, const Rational& v) { return k.second < v; });
    if (hi->second == t) {
      return hi->first;
    }
    auto lo = std::prev(hi);
    return Rational(lo->first + (t - lo->second) / (hi->second - lo->second) * (hi->first - lo->first));
  };
  std::vector<Rational> ss;
  for (const auto& k : knots) {
    ss.push_back(k.first);
  }
  for (const auto& b : loop.breakpoints()) {
    ss.push_back(phi_inverse(b.t));
  }
  std::sort(ss.begin(), ss.end());
  ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
  std::vector<Breakpoint> bps;
  bps.reserve(ss.size());
  for (const Rational& s : ss) {
    bps.push_back({s, eval(loop.path(), phi(s))});
  }
  return Loop(PLPath(std::move(bps)), loop.space());
}

int max_circle_touched(const Loop& loop) {
  int best = 0;
  for (const auto& b : loop.breakpoints()) {
    for (const EdgeRef& e : loop.space().edges_containing(b.point)) {
      best = std::max(best, e.circle);
    }
  }
  return best;
}

}  // namespace pi1lab
