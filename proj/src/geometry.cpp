#include "pi1lab/geometry.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace pi1lab {

Point2 operator+(const Point2& a, const Point2& b) {
  return {a.x + b.x, a.y + b.y};
}

Point2 operator-(const Point2& a, const Point2& b) {
  return {a.x - b.x, a.y - b.y};
}

Point2 operator*(const Rational& s, const Point2& a) {
  return {s * a.x, s * a.y};
}

Rational dot(const Point2& a, const Point2& b) {
  return a.x * b.x + a.y * b.y;
}

Rational cross(const Point2& a, const Point2& b) {
  return a.x * b.y - a.y * b.x;
}

Rational norm_sq(const Point2& a) {
  return dot(a, a);
}

int orientation(const Point2& a, const Point2& b, const Point2& c) {
  return sgn(cross(b - a, c - a));
}

bool lex_less(const Point2& a, const Point2& b) {
  if (a.x != b.x) {
    return a.x < b.x;
  }
  return a.y < b.y;
}

std::string to_string(const Point2& p) {
  return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

Segment::Segment(Point2 a, Point2 b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == b_) {
    throw std::invalid_argument("degenerate segment at " + to_string(a_));
  }
}

bool Segment::contains(const Point2& q) const {
  if (orientation(a_, b_, q) != 0) {
    return false;
  }
  const Rational t = dot(q - a_, b_ - a_);
  return sgn(t) >= 0 && t <= length_sq();
}

Rational Segment::parameter_of(const Point2& q) const {
  return dot(q - a_, b_ - a_) / length_sq();
}

Point2 Segment::at(const Rational& lambda) const {
  return a_ + lambda * (b_ - a_);
}

Rational point_segment_distance_sq(const Point2& q, const Segment& s) {
  Rational lambda = s.parameter_of(q);
  if (sgn(lambda) < 0) {
    lambda = 0;
  } else if (lambda > 1) {
    lambda = 1;
  }
  return norm_sq(q - s.at(lambda));
}

SegmentIntersection segments_intersect(const Segment& s1, const Segment& s2) {
  const int o1 = orientation(s1.a(), s1.b(), s2.a());
  const int o2 = orientation(s1.a(), s1.b(), s2.b());
  SegmentIntersection out;
  if (o1 == 0 && o2 == 0) {
    Rational ta = s1.parameter_of(s2.a());
    Rational tb = s1.parameter_of(s2.b());
    if (tb < ta) {
      std::swap(ta, tb);
    }
    Rational lo = ta < 0 ? Rational(0) : ta;
    Rational hi = tb > 1 ? Rational(1) : tb;
    if (hi < lo) {
      return out;
    }
    Point2 p = s1.at(lo);
    Point2 q = s1.at(hi);
    if (lo == hi) {
      out.kind = SegmentIntersection::Kind::point;
      out.first = p;
      return out;
    }
    if (lex_less(q, p)) {
      std::swap(p, q);
    }
    out.kind = SegmentIntersection::Kind::subsegment;
    out.first = p;
    out.second = q;
    return out;
  }
  const int o3 = orientation(s2.a(), s2.b(), s1.a());
  const int o4 = orientation(s2.a(), s2.b(), s1.b());
  if (o1 * o2 > 0 || o3 * o4 > 0) {
    return out;
  }
  const Point2 d1 = s1.direction();
  const Point2 d2 = s2.direction();
  const Rational t = cross(s2.a() - s1.a(), d2) / cross(d1, d2);
  out.kind = SegmentIntersection::Kind::point;
  out.first = s1.at(t);
  return out;
}

PLPath::PLPath(std::vector<Breakpoint> breakpoints) : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.size() < 2) {
    throw std::invalid_argument("a path needs at least two breakpoints");
  }
  if (breakpoints_.front().t != 0 || breakpoints_.back().t != 1) {
    throw std::invalid_argument("path parameters must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1].t < breakpoints_[i].t)) {
      throw std::invalid_argument("path parameters must be strictly increasing (at t = " +
                                  to_string(breakpoints_[i].t) + ")");
    }
  }
}

Point2 eval(const PLPath& path, const Rational& t) {
  if (sgn(t) < 0 || t > 1) {
    throw std::out_of_range("path parameter " + to_string(t) + " outside [0,1]");
  }
  const auto& bps = path.breakpoints();
  auto hi = std::lower_bound(bps.begin(), bps.end(), t,
                             [](const Breakpoint& b, const Rational& v) { return b.t < v; });
  if (hi->t == t) {
    return hi->point;
  }
  auto lo = std::prev(hi);
  Rational s = (t - lo->t) / (hi->t - lo->t);
  return lo->point + s * (hi->point - lo->point);
}

std::vector<Rational> common_refinement(const PLPath& f, const PLPath& g) {
  std::vector<Rational> ts;
  ts.reserve(f.size() + g.size());
  for (const auto& b : f.breakpoints()) {
    ts.push_back(b.t);
  }
  for (const auto& b : g.breakpoints()) {
    ts.push_back(b.t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

SupDistance sup_distance(const PLPath& f, const PLPath& g) {
  SupDistance best{Rational(-1), Rational(0)};
  for (const Rational& t : common_refinement(f, g)) {
    Rational d = norm_sq(eval(f, t) - eval(g, t));
    if (d > best.squared) {
      best.squared = d;
      best.attained_at = t;
    }
  }
  return best;
}

namespace {

// c2 s^2 + c1 s + c0 with c2 >= 0: squared distance along a source segment to
// one feature (an endpoint or a supporting line) of a target segment.
struct Quadratic {
  Rational c2;
  Rational c1;
  Rational c0;

  Rational operator()(const Rational& s) const { return (c2 * s + c1) * s + c0; }
  Surd operator()(const Surd& s) const {
    return (Surd(c2) * s + Surd(c1)) * s + Surd(c0);
  }
};

Quadratic distance_to_point(const Point2& a, const Point2& u, const Point2& e) {
  Point2 w = a - e;
  return {norm_sq(u), 2 * dot(w, u), norm_sq(w)};
}

Quadratic distance_to_line(const Point2& a, const Point2& u, const Segment& t) {
  const Point2 v = t.direction();
  const Rational vv = norm_sq(v);
  const Rational k0 = cross(a - t.a(), v);
  const Rational k1 = cross(u, v);
  return {k1 * k1 / vv, 2 * k0 * k1 / vv, k0 * k0 / vv};
}

// Roots of q in the open interval (lo, hi).
std::vector<Surd> roots_inside(const Quadratic& q, const Rational& lo, const Rational& hi) {
  std::vector<Surd> candidates;
  if (q.c2 == 0) {
    if (q.c1 != 0) {
      candidates.emplace_back(Rational(-q.c0 / q.c1));
    }
  } else {
    Rational disc = q.c1 * q.c1 - 4 * q.c2 * q.c0;
    if (sgn(disc) >= 0) {
      Rational centre = -q.c1 / (2 * q.c2);
      Rational half = 1 / (2 * q.c2);
      candidates.emplace_back(centre, half, disc);
      if (sgn(disc) > 0) {
        candidates.emplace_back(centre, Rational(-half), disc);
      }
    }
  }
  std::vector<Surd> out;
  for (auto& c : candidates) {
    if (Surd(lo) < c && c < Surd(hi)) {
      out.push_back(std::move(c));
    }
  }
  return out;
}

template <typename Value>
Value envelope(const std::vector<Quadratic>& pieces, const Value& s) {
  Value best = pieces.front()(s);
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    Value v = pieces[i](s);
    if (v < best) {
      best = std::move(v);
    }
  }
  return best;
}

// max over s in [0,1] of min_j dist(a + s u, T_j)^2. Each dist^2 is a convex
// piecewise quadratic whose pieces change where the projection onto T_j
// leaves the segment. After refining [0,1] at all such parameters, the lower
// envelope on each interval is a min of convex quadratics, so its maximum is
// at an interval end or where two quadratics cross.
Surd directed_from_segment(const Segment& source, std::span<const Segment> targets) {
  const Point2& a = source.a();
  const Point2 u = source.direction();

  std::vector<Rational> cuts{Rational(0), Rational(1)};
  for (const Segment& t : targets) {
    const Point2 v = t.direction();
    const Rational vv = norm_sq(v);
    const Rational alpha = dot(a - t.a(), v) / vv;
    const Rational beta = dot(u, v) / vv;
    if (beta == 0) {
      continue;
    }
    for (const Rational& edge : {Rational(0), Rational(1)}) {
      Rational s = (edge - alpha) / beta;
      if (sgn(s) > 0 && s < 1) {
        cuts.push_back(s);
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::optional<Surd> best;
  auto offer = [&best](Surd v) {
    if (!best || *best < v) {
      best = std::move(v);
    }
  };

  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Rational& lo = cuts[k];
    const Rational& hi = cuts[k + 1];
    const Rational mid = (lo + hi) / 2;
    std::vector<Quadratic> pieces;
    pieces.reserve(targets.size());
    for (const Segment& t : targets) {
      Rational lambda = t.parameter_of(a + mid * u);
      if (sgn(lambda) < 0) {
        pieces.push_back(distance_to_point(a, u, t.a()));
      } else if (lambda > 1) {
        pieces.push_back(distance_to_point(a, u, t.b()));
      } else {
        pieces.push_back(distance_to_line(a, u, t));
      }
    }
    offer(Surd(envelope(pieces, lo)));
    offer(Surd(envelope(pieces, hi)));
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      for (std::size_t j = i + 1; j < pieces.size(); ++j) {
        Quadratic diff{pieces[i].c2 - pieces[j].c2, pieces[i].c1 - pieces[j].c1,
                       pieces[i].c0 - pieces[j].c0};
        for (const Surd& s : roots_inside(diff, lo, hi)) {
          offer(envelope(pieces, s));
        }
      }
    }
  }
  return *best;
}

}  // namespace

Surd directed_hausdorff_sq(std::span<const Segment> source, std::span<const Segment> target) {
  if (source.empty() || target.empty()) {
    throw std::invalid_argument("Hausdorff distance needs nonempty segment sets");
  }
  Surd best = directed_from_segment(source.front(), target);
  for (std::size_t i = 1; i < source.size(); ++i) {
    Surd v = directed_from_segment(source[i], target);
    if (best < v) {
      best = std::move(v);
    }
  }
  return best;
}

Surd hausdorff_distance_sq(std::span<const Segment> a, std::span<const Segment> b) {
  Surd ab = directed_hausdorff_sq(a, b);
  Surd ba = directed_hausdorff_sq(b, a);
  return ab < ba ? ba : ab;
}

}  // namespace pi1lab
