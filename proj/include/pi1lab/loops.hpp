// Based piecewise-linear loops in X or Y, their decomposition into excursions
// away from p, and the standard loops used as witnesses.

#pragma once

#include "pi1lab/geometry.hpp"
#include "pi1lab/spaces.hpp"
#include "pi1lab/words.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pi1lab {

struct Violation {
  std::string reason;
  Rational t_begin;
  Rational t_end;
};

std::string to_string(const Violation& v);

class LoopError : public std::invalid_argument {
 public:
  explicit LoopError(Violation v);
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

/// First violation of: path(0) = path(1) = p, every breakpoint in the space,
/// every linear piece inside a single edge.
std::optional<Violation> validate(const PLPath& path, const Space& space);

/// A validated based loop.
class Loop {
 public:
  /// Throws LoopError when `path` is not a loop in `space`.
  Loop(PLPath path, Space space);

  const PLPath& path() const { return path_; }
  const Space& space() const { return space_; }
  const std::vector<Breakpoint>& breakpoints() const { return path_.breakpoints(); }

  /// "points [(t,x,y), ...]" with exact rationals.
  std::string describe() const;

 private:
  PLPath path_;
  Space space_;
};

std::optional<Violation> validate(const Loop& loop);

/// The edge containing both points, when a != b. Either point may be p.
std::optional<EdgeRef> carrier_edge(const Point2& a, const Point2& b, const Space& space);

/// Maximal stretch [t_start, t_end] on which the loop is away from p.
struct Excursion {
  Rational t_start;
  Rational t_end;
  ComponentId component;
  /// Breakpoints in the original parametrization, first and last at p.
  std::vector<Breakpoint> subpath;
};

std::vector<Excursion> decompose(const Loop& loop);

/// Signed number of traversals of C_n in the orientation p -> B_n -> D_n -> p.
/// Each point of C_n gets the coordinate (edge + fraction along edge) in
/// [0,3); summing per-piece coordinate changes gives three times the degree,
/// exactly. Throws std::invalid_argument for an alpha excursion.
std::int64_t winding_degree(const Excursion& excursion, const Space& space);

Loop constant_loop(const Space& space);
/// Up alpha on [0,1/2], down on [1/2,1]. Needs the compact space.
Loop standard_f(const Space& space);
/// Once around C_n, parametrized to shadow standard_f: B_n at t = 1/2, D_n
/// at t = (1 + w_n)/2, so the height always matches that of standard_f.
Loop standard_fn(int n, const Space& space);
/// Time at which standard_fn(n) reaches D_n.
Rational far_vertex_time(int n, const Space& space);

/// Half-speed concatenation. Throws std::invalid_argument for loops in
/// different spaces.
Loop concatenate(const Loop& a, const Loop& b);
Loop reverse(const Loop& a);
/// Concatenation of n >= 1 loops, the k-th on [k/n, (k+1)/n].
Loop concatenate_all(std::span<const Loop> loops);
/// The excursions of a loop, each rescaled to a loop of its own.
std::vector<Loop> split_at_base(const Loop& loop);

/// One signed traversal per letter, letters evenly spaced in time.
Loop realize_word(const Word& w, const Space& space);

/// The same parametrized loop viewed in another space of the same family
/// (for instance X -> Y along the inclusion j).
Loop include(const Loop& loop, const Space& target);

/// loop o phi for the increasing PL bijection phi of [0,1] given by knots
/// (s, phi(s)), which must start at (0,0) and end at (1,1).
Loop reparametrize(const Loop& loop, std::span<const std::pair<Rational, Rational>> knots);

/// Largest circle index any breakpoint of the loop lies on (0 if none).
int max_circle_touched(const Loop& loop);

}  // namespace pi1lab
