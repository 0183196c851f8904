#include "pi1lab/spaces.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace pi1lab {

std::string to_string(SpaceKind kind) {
  return kind == SpaceKind::bouquet_x ? "X" : "Y";
}

WidthProfile WidthProfile::pow10() {
  return {"pow10", [](int n) { return pi1lab::pow10(-10L * n); }};
}

WidthProfile WidthProfile::cubic() {
  return {"cubic", [](int n) { return make_rational(1, 10L * n * n * n); }};
}

WidthProfile WidthProfile::half() {
  return {"half", [](int) { return make_rational(1, 2); }};
}

WidthProfile WidthProfile::by_name(std::string_view name) {
  if (name == "default" || name == "pow10") {
    return pow10();
  }
  if (name == "cubic") {
    return cubic();
  }
  if (name == "half") {
    return half();
  }
  throw std::invalid_argument("unknown width profile '" + std::string(name) + "'");
}

const Segment& alpha_segment() {
  static const Segment alpha(base_point(), Point2{Rational(0), Rational(1)});
  return alpha;
}

Circle build_circle(int n, const WidthProfile& profile) {
  if (n < 2) {
    throw std::invalid_argument("circle index must be >= 2, got " + std::to_string(n));
  }
  const Rational w = profile.width(n);
  if (sgn(w) <= 0) {
    throw std::invalid_argument("width profile '" + profile.name + "' is not positive at n = " +
                                std::to_string(n));
  }
  Point2 apex{make_rational(1, n), Rational(1)};
  Point2 far = apex + w * Point2{Rational(n), Rational(-1)};
  Circle c{n,
           apex,
           far,
           {Segment(base_point(), apex), Segment(apex, far), Segment(far, base_point())},
           {},
           far.x};
  for (int e = 0; e < 3; ++e) {
    c.edge_length_sq[e] = c.edges[e].length_sq();
  }
  return c;
}

std::string circle_overlap(const Circle& c, const Circle& d) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      SegmentIntersection hit = segments_intersect(c.edges[i], d.edges[j]);
      bool ok = hit.kind == SegmentIntersection::Kind::empty ||
                (hit.kind == SegmentIntersection::Kind::point && hit.first == base_point());
      if (!ok) {
        std::string where = hit.kind == SegmentIntersection::Kind::point
                                ? "at " + to_string(hit.first)
                                : "along " + to_string(hit.first) + "-" + to_string(hit.second);
        return "edge " + std::to_string(i) + " of C" + std::to_string(c.index) + " meets edge " +
               std::to_string(j) + " of C" + std::to_string(d.index) + " " + where;
      }
    }
  }
  return {};
}

namespace {

// Away from p every point of C_n has x / y >= 1/n, the slope of edge p B_n.
int first_candidate(const Point2& q, int max_index) {
  const Integer lower = ceil(Rational(q.y / q.x));
  return lower > max_index ? max_index + 1 : std::max(2, static_cast<int>(lower.get_si()));
}

}  // namespace

std::string to_string(const EdgeRef& e) {
  if (e.is_alpha()) {
    return "alpha";
  }
  return "C" + std::to_string(e.circle) + ".e" + std::to_string(e.edge);
}

ComponentId ComponentId::circle(int n) {
  if (n < 2) {
    throw std::invalid_argument("circle index must be >= 2, got " + std::to_string(n));
  }
  return ComponentId(n);
}

int ComponentId::circle_index() const {
  if (is_alpha()) {
    throw std::logic_error("the alpha component has no circle index");
  }
  return circle_;
}

std::string ComponentId::to_string() const {
  return is_alpha() ? "alpha" : "C" + std::to_string(circle_);
}

struct Space::Family {
  WidthProfile profile;
  int max_index;
  Validation validation;
  mutable std::mutex mutex;
  mutable std::map<int, std::unique_ptr<const Circle>> circles;

  const Circle& materialize(int n) const {
    std::lock_guard lock(mutex);
    if (auto it = circles.find(n); it != circles.end()) {
      return *it->second;
    }
    auto c = std::make_unique<const Circle>(build_circle(n, profile));
    if (validation == Validation::strict) {
      check_profile(n);
      for (const auto& [m, other] : circles) {
        if (std::string bad = circle_overlap(*other, *c); !bad.empty()) {
          throw std::domain_error("width profile '" + profile.name + "' breaks disjointness: " + bad);
        }
      }
    }
    return *circles.emplace(n, std::move(c)).first->second;
  }

  void check_profile(int n) const {
    if (n > 2 && !(profile.width(n) < profile.width(n - 1))) {
      throw std::domain_error("width profile '" + profile.name +
                              "' is not strictly decreasing at n = " + std::to_string(n));
    }
  }
};

Space::Space(std::shared_ptr<Family> family, SpaceKind kind)
    : family_(std::move(family)), kind_(kind) {}

Space Space::bouquet(int max_index, WidthProfile profile, Validation validation) {
  if (max_index < 2) {
    throw std::invalid_argument("space max index must be >= 2");
  }
  auto family = std::make_shared<Family>();
  family->profile = std::move(profile);
  family->max_index = max_index;
  family->validation = validation;
  return Space(std::move(family), SpaceKind::bouquet_x);
}

Space Space::compact(int max_index, WidthProfile profile, Validation validation) {
  return bouquet(max_index, std::move(profile), validation).as_compact();
}

Space Space::as_bouquet() const {
  return Space(family_, SpaceKind::bouquet_x);
}

Space Space::as_compact() const {
  return Space(family_, SpaceKind::compact_y);
}

int Space::max_index() const {
  return family_->max_index;
}

const WidthProfile& Space::profile() const {
  return family_->profile;
}

Validation Space::validation() const {
  return family_->validation;
}

const Circle& Space::circle(int n) const {
  return family_->materialize(n);
}

const Segment& Space::edge(const EdgeRef& e) const {
  if (e.is_alpha()) {
    if (!has_alpha()) {
      throw std::invalid_argument("alpha is not part of X");
    }
    return alpha_segment();
  }
  return circle(e.circle).edges.at(static_cast<std::size_t>(e.edge));
}

std::vector<EdgeRef> Space::edges_containing(const Point2& q) const {
  std::vector<EdgeRef> out;
  if (has_alpha() && alpha_segment().contains(q)) {
    out.push_back(EdgeRef{});
  }
  if (q == base_point()) {
    return out;
  }
  // Every C_n lies in the strip 0 <= y <= 1 and in the half plane x >= 0.
  if (sgn(q.y) < 0 || q.y > 1 || sgn(q.x) <= 0) {
    return out;
  }
  for (int n = first_candidate(q, max_index()); n <= max_index(); ++n) {
    const Circle& c = circle(n);
    if (q.x > c.max_x) {
      continue;
    }
    for (int e = 0; e < 3; ++e) {
      if (c.edges[e].contains(q)) {
        out.push_back(EdgeRef{n, e});
      }
    }
  }
  return out;
}

std::string Space::describe() const {
  return to_string(kind_) + "(" + std::to_string(max_index()) + ") width=" + profile().name;
}

Membership membership(const Point2& q, const Space& space, int max_index) {
  if (q == base_point()) {
    return {Membership::Kind::base_point};
  }
  if (space.has_alpha() && alpha_segment().contains(q)) {
    return {Membership::Kind::on_alpha, 0, 0};
  }
  if (sgn(q.y) < 0 || q.y > 1 || sgn(q.x) <= 0) {
    return {};
  }
  for (int n = first_candidate(q, max_index); n <= max_index; ++n) {
    const Circle& c = space.circle(n);
    if (q.x > c.max_x) {
      continue;
    }
    for (int e = 0; e < 3; ++e) {
      if (c.edges[e].contains(q)) {
        return {Membership::Kind::on_circle, n, e};
      }
    }
  }
  return {};
}

ComponentId component_of(const Point2& q, const Space& space) {
  Membership m = membership(q, space);
  switch (m.kind) {
    case Membership::Kind::base_point:
      throw std::invalid_argument("the base point p lies in no component of the space minus p");
    case Membership::Kind::outside:
      throw std::invalid_argument("point " + to_string(q) + " is not in " + space.describe());
    case Membership::Kind::on_alpha:
      return ComponentId::alpha();
    case Membership::Kind::on_circle:
      break;
  }
  return ComponentId::circle(m.circle);
}

ProbeReport verify_disjointness(const Space& space, int up_to) {
  if (up_to < 3) {
    throw std::invalid_argument("disjointness check needs up_to >= 3");
  }
  ProbeReport report;
  report.probe = "disjointness";
  report.claim = "C_n meets C_m exactly in p = (0,0) for all 2 <= n < m <= " + std::to_string(up_to);
  report.parameters = {{"profile", space.profile().name}, {"up_to", std::to_string(up_to)}};

  std::vector<Circle> circles;
  circles.reserve(static_cast<std::size_t>(up_to - 1));
  for (int n = 2; n <= up_to; ++n) {
    circles.push_back(build_circle(n, space.profile()));
  }
  int pairs = 0;
  int violations = 0;
  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      ++pairs;
      if (std::string bad = circle_overlap(circles[i], circles[j]); !bad.empty()) {
        ++violations;
        report.fail({"pair (" + std::to_string(circles[i].index) + "," +
                         std::to_string(circles[j].index) + ")",
                     "",
                     {{"intersection", bad}}});
      }
    }
  }
  report.results = {{"pairs_checked", std::to_string(pairs)},
                    {"violations", std::to_string(violations)}};
  return report;
}

ProbeReport hausdorff_convergence(const Space& space, int up_to, int digits) {
  if (space.kind() != SpaceKind::compact_y) {
    throw std::invalid_argument("Hausdorff convergence to alpha needs the compact space Y");
  }
  if (up_to < 2) {
    throw std::invalid_argument("Hausdorff table needs up_to >= 2");
  }
  ProbeReport report;
  report.probe = "hausdorff";
  report.claim = "d_H(C_n, alpha) strictly decreases with d_H(C_n, alpha)^2 <= (2/n)^2";
  report.parameters = {{"profile", space.profile().name}, {"up_to", std::to_string(up_to)}};

  ReportTable table{"d_H(C_n, alpha)", {"n", "d_sq", "d", "bound_sq", "ok"}, {}};
  const Segment alpha[] = {alpha_segment()};
  const Rational epsilon = make_rational(1, 10);
  std::optional<Surd> previous;
  bool decreasing = true;
  bool tail_below_epsilon = true;
  for (int n = 2; n <= up_to; ++n) {
    const Circle c = build_circle(n, space.profile());
    const Surd d_sq = hausdorff_distance_sq(c.edges, alpha);
    const Rational bound = make_rational(4, static_cast<long>(n) * n);
    const bool within = d_sq <= Surd(bound);
    table.rows.push_back({std::to_string(n), d_sq.to_string(),
                          d_sq.is_rational() ? Surd::sqrt(d_sq.as_rational()).to_decimal(digits)
                                             : "sqrt(" + d_sq.to_decimal(digits) + ")", to_string(bound),
                          within ? "yes" : "no"});
    if (!within) {
      report.fail({"C" + std::to_string(n), "", {{"d_sq", d_sq.to_string()}, {"bound_sq", to_string(bound)}}});
    }
    if (previous && !(d_sq < *previous)) {
      decreasing = false;
      report.fail({"C" + std::to_string(n),
                   "",
                   {{"d_sq", d_sq.to_string()}, {"previous_d_sq", previous->to_string()}}});
    }
    if (n >= 20 && !(d_sq < Surd(epsilon * epsilon))) {
      tail_below_epsilon = false;
      report.fail({"C" + std::to_string(n), "", {{"d_sq", d_sq.to_string()}, {"epsilon", "1/10"}}});
    }
    previous = d_sq;
  }
  report.tables.push_back(std::move(table));
  report.results.emplace_back("strictly_decreasing", decreasing ? "yes" : "no");
  if (up_to >= 20) {
    report.results.emplace_back("limit", std::string("for epsilon = 1/10 all rows n >= 20 are ") +
                                             (tail_below_epsilon ? "below epsilon" : "NOT below epsilon"));
  }
  return report;
}

}  // namespace pi1lab
