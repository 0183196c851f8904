// Test helpers: seeded generators for property tests and floating-point
// sampling oracles that cross-check the exact computations.

#pragma once

#include "pi1lab/geometry.hpp"
#include "pi1lab/loops.hpp"
#include "pi1lab/random.hpp"
#include "pi1lab/spaces.hpp"
#include "pi1lab/words.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace testing {

using namespace pi1lab;

inline double to_double(const Rational& q) {
  return q.get_d();
}

inline Rational small_rational(Rng& rng, long range = 8, long den = 16) {
  const long num = static_cast<long>(rng.below(static_cast<int>(2 * range * den + 1))) - range * den;
  return make_rational(num, den);
}

inline Point2 small_point(Rng& rng) {
  return {small_rational(rng), small_rational(rng)};
}

inline Segment random_segment(Rng& rng) {
  for (;;) {
    Point2 a = small_point(rng);
    Point2 b = small_point(rng);
    if (a != b) {
      return Segment(a, b);
    }
  }
}

inline std::vector<Letter> random_letters(Rng& rng, int length, int max_generator) {
  std::vector<Letter> out;
  for (int i = 0; i < length; ++i) {
    out.push_back({kFirstGenerator + rng.below(max_generator - kFirstGenerator + 1), rng.coin() ? 1 : -1});
  }
  return out;
}

/// Free reduction by repeated scanning for an adjacent cancelling pair.
inline std::vector<Letter> fixpoint_reduce(std::vector<Letter> letters) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i].generator == letters[i + 1].generator && letters[i].sign == -letters[i + 1].sign) {
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i),
                      letters.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return letters;
}

inline Word random_reduced_word(Rng& rng, int max_length, int max_generator) {
  return reduce(random_letters(rng, rng.below(max_length + 1), max_generator));
}

/// Point of C_n at lift coordinate c: edge floor(c) mod 3, fraction c - floor(c).
inline Point2 lift_point(const Circle& circle, const Rational& c) {
  const Integer whole = floor(c);
  const long edge = ((whole.get_si() % 3) + 3) % 3;
  return circle.edges[static_cast<std::size_t>(edge)].at(c - whole);
}

/// Lift coordinates of a random walk around C_n from 0 to 3 * degree; each
/// step stays inside one closed unit interval, hence on one edge.
inline std::vector<Rational> wandering_lift(Rng& rng, std::int64_t degree, int steps) {
  std::vector<Rational> lift{Rational(0)};
  for (int k = 0; k < steps; ++k) {
    const Rational& c = lift.back();
    Integer base = floor(c);
    if (c == base && rng.coin()) {
      base -= 1;
    }
    Rational next = Rational(base) + (rng.below(4) == 0 ? Rational(rng.below(2)) : rng.unit_fraction());
    if (next != c) {
      lift.push_back(next);
    }
  }
  const Rational target(3 * degree);
  while (lift.back() != target) {
    const Rational& c = lift.back();
    Rational next = c < target ? Rational(floor(c) + 1) : Rational(ceil(c) - 1);
    lift.push_back(next);
  }
  return lift;
}

struct LoopWithWord {
  Loop loop;
  Word word;
};

/// Random loop with known word: wandering excursions into circles 2..max_circle
/// of random degree, interleaved (in Y) with up-and-down wiggles on alpha.
inline LoopWithWord wandering_loop(const Space& space, Rng& rng, int excursions, int max_circle) {
  std::vector<Point2> points{base_point()};
  std::vector<Syllable> syllables;
  for (int k = 0; k < excursions; ++k) {
    if (space.has_alpha() && rng.below(4) == 0) {
      for (int j = 0, m = 1 + rng.below(3); j < m; ++j) {
        points.push_back({Rational(0), rng.unit_fraction()});
      }
      points.push_back(base_point());
      continue;
    }
    const int n = kFirstGenerator + rng.below(max_circle - 1);
    const std::int64_t degree = rng.below(5) - 2;
    for (const Rational& c : wandering_lift(rng, degree, rng.below(6))) {
      Point2 p = lift_point(space.circle(n), c);
      if (p != points.back()) {
        points.push_back(std::move(p));
      }
    }
    if (points.back() != base_point()) {
      points.push_back(base_point());
    }
    syllables.push_back({n, degree});
  }
  std::vector<Breakpoint> bps;
  const long last = static_cast<long>(points.size()) - 1;
  if (last == 0) {
    return {constant_loop(space), Word()};
  }
  for (long i = 0; i <= last; ++i) {
    bps.push_back({make_rational(i, last), points[static_cast<std::size_t>(i)]});
  }
  return {Loop(PLPath(std::move(bps)), space), Word::from_syllables(syllables)};
}

/// Increasing PL bijection of [0,1] with a few random knots.
inline std::vector<std::pair<Rational, Rational>> random_knots(Rng& rng) {
  std::vector<Rational> xs{Rational(0), Rational(1)};
  std::vector<Rational> ys{Rational(0), Rational(1)};
  for (int k = 0, m = rng.below(4); k < m; ++k) {
    xs.push_back(rng.unit_fraction());
    ys.push_back(rng.unit_fraction());
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  const std::size_t m = std::min(xs.size(), ys.size());
  std::vector<std::pair<Rational, Rational>> knots{{Rational(0), Rational(0)}};
  for (std::size_t i = 1; i + 1 < m; ++i) {
    knots.emplace_back(xs[i], ys[i]);
  }
  knots.emplace_back(Rational(1), Rational(1));
  return knots;
}

struct DPoint {
  double x;
  double y;
};

inline DPoint approx(const Point2& p) {
  return {to_double(p.x), to_double(p.y)};
}

inline DPoint eval_double(const PLPath& path, double t) {
  const auto& bps = path.breakpoints();
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const double t0 = to_double(bps[i].t);
    const double t1 = to_double(bps[i + 1].t);
    if (t <= t1 || i + 2 == bps.size()) {
      const double s = t1 > t0 ? std::clamp((t - t0) / (t1 - t0), 0.0, 1.0) : 0.0;
      const DPoint a = approx(bps[i].point);
      const DPoint b = approx(bps[i + 1].point);
      return {a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)};
    }
  }
  return approx(bps.back().point);
}

inline double distance(DPoint a, DPoint b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// max over `samples` + 1 equally spaced parameters of |f(t) - g(t)|.
inline double sampled_sup_distance(const PLPath& f, const PLPath& g, int samples) {
  double best = 0;
  for (int k = 0; k <= samples; ++k) {
    const double t = static_cast<double>(k) / samples;
    best = std::max(best, distance(eval_double(f, t), eval_double(g, t)));
  }
  return best;
}

inline std::vector<DPoint> sample_segment(const Segment& s, int samples) {
  const DPoint a = approx(s.a());
  const DPoint b = approx(s.b());
  std::vector<DPoint> out;
  for (int k = 0; k <= samples; ++k) {
    const double u = static_cast<double>(k) / samples;
    out.push_back({a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)});
  }
  return out;
}

inline double sampled_point_segment_distance(const Point2& q, const Segment& s, int samples) {
  double best = std::numeric_limits<double>::infinity();
  for (const DPoint& p : sample_segment(s, samples)) {
    best = std::min(best, distance(approx(q), p));
  }
  return best;
}

/// Hausdorff distance between the sampled point clouds of two segment sets.
inline double sampled_hausdorff(std::span<const Segment> a, std::span<const Segment> b, int samples) {
  std::vector<DPoint> pa;
  std::vector<DPoint> pb;
  for (const Segment& s : a) {
    for (const DPoint& p : sample_segment(s, samples)) {
      pa.push_back(p);
    }
  }
  for (const Segment& s : b) {
    for (const DPoint& p : sample_segment(s, samples)) {
      pb.push_back(p);
    }
  }
  auto directed = [](const std::vector<DPoint>& from, const std::vector<DPoint>& to) {
    double worst = 0;
    for (const DPoint& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const DPoint& q : to) {
        best = std::min(best, distance(p, q));
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(pa, pb), directed(pb, pa));
}

/// Decimal approximation of an exact surd for tolerance checks.
inline double approx(const Surd& s) {
  return to_double(s.rational_part()) + to_double(s.surd_coefficient()) * std::sqrt(to_double(s.radicand()));
}

}  // namespace testing
