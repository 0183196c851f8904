// Exact planar primitives: points, segments, piecewise-linear paths and the
// metrics between them. No floating point is used in any predicate.

#pragma once

#include "pi1lab/rational.hpp"
#include "pi1lab/surd.hpp"

#include <span>
#include <string>
#include <vector>

namespace pi1lab {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

Point2 operator+(const Point2& a, const Point2& b);
Point2 operator-(const Point2& a, const Point2& b);
Point2 operator*(const Rational& s, const Point2& a);

Rational dot(const Point2& a, const Point2& b);
Rational cross(const Point2& a, const Point2& b);
Rational norm_sq(const Point2& a);
/// Sign of the turn a -> b -> c: +1 left, -1 right, 0 collinear.
int orientation(const Point2& a, const Point2& b, const Point2& c);
/// Lexicographic (x, then y).
bool lex_less(const Point2& a, const Point2& b);

std::string to_string(const Point2& p);

/// A closed straight segment with distinct endpoints.
class Segment {
 public:
  /// Throws std::invalid_argument when a == b.
  Segment(Point2 a, Point2 b);

  const Point2& a() const { return a_; }
  const Point2& b() const { return b_; }
  Point2 direction() const { return b_ - a_; }
  Rational length_sq() const { return norm_sq(b_ - a_); }

  /// Exact point-on-closed-segment test.
  bool contains(const Point2& q) const;
  /// Affine coordinate of q along a -> b (0 at a, 1 at b). q must lie on the
  /// supporting line.
  Rational parameter_of(const Point2& q) const;
  Point2 at(const Rational& lambda) const;

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Point2 a_;
  Point2 b_;
};

Rational point_segment_distance_sq(const Point2& q, const Segment& s);

struct SegmentIntersection {
  enum class Kind { empty, point, subsegment };

  Kind kind = Kind::empty;
  // For `point` only `first` is set; for `subsegment` first is lex-smaller.
  Point2 first;
  Point2 second;

  friend bool operator==(const SegmentIntersection&, const SegmentIntersection&) = default;
};

SegmentIntersection segments_intersect(const Segment& s1, const Segment& s2);

struct Breakpoint {
  Rational t;
  Point2 point;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// A piecewise-linear map [0,1] -> R^2 given by exact breakpoints.
///
/// Invariants: at least two breakpoints, the first at t = 0, the last at
/// t = 1, parameters strictly increasing.
class PLPath {
 public:
  /// Throws std::invalid_argument when the invariants fail.
  explicit PLPath(std::vector<Breakpoint> breakpoints);

  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
  std::size_t size() const { return breakpoints_.size(); }
  const Point2& front() const { return breakpoints_.front().point; }
  const Point2& back() const { return breakpoints_.back().point; }

  friend bool operator==(const PLPath&, const PLPath&) = default;

 private:
  std::vector<Breakpoint> breakpoints_;
};

/// Exact evaluation; throws std::out_of_range for t outside [0,1].
Point2 eval(const PLPath& path, const Rational& t);

/// Sup-norm distance between two parametrized paths. On every interval of
/// the common breakpoint refinement |f - g| is the norm of an affine map,
/// hence convex, so the maximum sits at a refined breakpoint.
struct SupDistance {
  Rational squared;
  Rational attained_at;  // smallest refined parameter achieving the max

  Surd value() const { return Surd::sqrt(squared); }
  std::string decimal(int digits) const { return value().to_decimal(digits); }
};

SupDistance sup_distance(const PLPath& f, const PLPath& g);

/// Sorted union of both breakpoint parameter sets.
std::vector<Rational> common_refinement(const PLPath& f, const PLPath& g);

/// Exact squared Hausdorff distance between the unions of two nonempty
/// segment sets. The value is rational unless the extremum falls on an
/// irrational crossing of two distance branches. Throws std::invalid_argument
/// for an empty input.
Surd hausdorff_distance_sq(std::span<const Segment> a, std::span<const Segment> b);

/// max over points x of the source set of dist(x, target)^2.
Surd directed_hausdorff_sq(std::span<const Segment> source, std::span<const Segment> target);

}  // namespace pi1lab
