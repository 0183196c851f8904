// The bouquet X of thin triangles C_n joined at p = (0,0), and its closure
// Y = X u alpha, where alpha = [(0,0),(0,1)].
//
// C_n is the boundary of the triangle p, B_n = (1/n, 1), D_n = B_n + w_n (n,-1)
// with width profile w_n (default 1/10^(10n)). Circles are materialized on
// demand and cached per family, so a Space handle stands for the whole
// countable union while only ever storing the indices a computation touched.

#pragma once

#include "pi1lab/geometry.hpp"
#include "pi1lab/report.hpp"

#include <array>
#include <compare>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace pi1lab {

enum class SpaceKind { bouquet_x, compact_y };

std::string to_string(SpaceKind kind);

struct WidthProfile {
  std::string name;
  std::function<Rational(int)> width;

  /// w_n = 1/10^(10n). Also available as "default".
  static WidthProfile pow10();
  /// w_n = 1/(10 n^3): still disjoint, with short rationals for large n.
  static WidthProfile cubic();
  /// w_n = 1/2: a control profile whose triangles overlap.
  static WidthProfile half();
  /// Looks up "default", "pow10", "cubic" or "half". Throws
  /// std::invalid_argument for other names.
  static WidthProfile by_name(std::string_view name);
};

/// strict: materializing a circle checks the width profile and disjointness
/// against every previously materialized circle, throwing on a violation.
/// deferred: no checks, so violations surface as probe report content.
enum class Validation { strict, deferred };

inline const Point2& base_point() {
  static const Point2 p{Rational(0), Rational(0)};
  return p;
}

/// alpha = [(0,0),(0,1)].
const Segment& alpha_segment();

struct Circle {
  int index = 0;
  Point2 apex;  // B_n
  Point2 far;   // D_n
  /// p -> B_n, B_n -> D_n, D_n -> p; this orientation defines +g_n.
  std::array<Segment, 3> edges;
  std::array<Rational, 3> edge_length_sq;
  /// Largest x coordinate on C_n, that of D_n.
  Rational max_x;

  const Point2& base() const { return base_point(); }
};

/// Throws std::invalid_argument for n < 2 or a non-positive width.
Circle build_circle(int n, const WidthProfile& profile);

/// Empty when C_n and C_m meet exactly in {p}; otherwise a description of the
/// first offending edge pair.
std::string circle_overlap(const Circle& c, const Circle& d);

/// An edge of the 1-complex: edge 0..2 of circle n, or alpha.
struct EdgeRef {
  static constexpr int kAlpha = 0;

  int circle = kAlpha;
  int edge = 0;

  bool is_alpha() const { return circle == kAlpha; }
  /// True for edges having p as an endpoint.
  bool touches_base() const { return is_alpha() || edge != 1; }

  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

std::string to_string(const EdgeRef& e);

/// A component of (space minus p).
class ComponentId {
 public:
  static ComponentId alpha() { return ComponentId(0); }
  static ComponentId circle(int n);

  bool is_alpha() const { return circle_ == 0; }
  /// Circle index; throws std::logic_error for the alpha component.
  int circle_index() const;
  std::string to_string() const;

  friend auto operator<=>(const ComponentId&, const ComponentId&) = default;

 private:
  explicit ComponentId(int n) : circle_(n) {}
  int circle_;
};

class Space {
 public:
  static Space bouquet(int max_index, WidthProfile profile = WidthProfile::pow10(),
                       Validation validation = Validation::strict);
  static Space compact(int max_index, WidthProfile profile = WidthProfile::pow10(),
                       Validation validation = Validation::strict);

  /// X and Y over the same circle family.
  Space as_bouquet() const;
  Space as_compact() const;

  SpaceKind kind() const { return kind_; }
  bool has_alpha() const { return kind_ == SpaceKind::compact_y; }
  /// Largest circle index considered by membership queries.
  int max_index() const;
  const WidthProfile& profile() const;
  Validation validation() const;

  /// Lazily materialized C_n, cached. Safe to call concurrently.
  const Circle& circle(int n) const;
  const Segment& edge(const EdgeRef& e) const;

  /// Edges (up to max_index) containing q. For q = p this lists only alpha
  /// and does not enumerate the circles; callers treat p separately.
  std::vector<EdgeRef> edges_containing(const Point2& q) const;

  /// True when both handles view the same family (X and Y may differ in kind).
  bool same_family(const Space& other) const { return family_ == other.family_; }
  friend bool operator==(const Space& a, const Space& b) {
    return a.family_ == b.family_ && a.kind_ == b.kind_;
  }

  /// DSL form, e.g. "Y(32) width=pow10".
  std::string describe() const;

 private:
  struct Family;
  Space(std::shared_ptr<Family> family, SpaceKind kind);

  std::shared_ptr<Family> family_;
  SpaceKind kind_;
};

struct Membership {
  enum class Kind { outside, base_point, on_alpha, on_circle };

  Kind kind = Kind::outside;
  int circle = 0;
  int edge = -1;  // lowest edge index containing the point

  friend bool operator==(const Membership&, const Membership&) = default;
};

Membership membership(const Point2& q, const Space& space, int max_index);
inline Membership membership(const Point2& q, const Space& space) {
  return membership(q, space, space.max_index());
}

/// Component of (space minus p) containing q. Throws std::invalid_argument
/// when q = p or q is not in the space.
ComponentId component_of(const Point2& q, const Space& space);

/// Checks C_n n C_m = {p} for all 2 <= n < m <= up_to with exact segment
/// intersections. up_to must be at least 3.
ProbeReport verify_disjointness(const Space& space, int up_to);

/// Exact d_H(C_n, alpha) for n = 2..up_to on a compact space, with the
/// strict-decrease and (2/n)^2 checks.
ProbeReport hausdorff_convergence(const Space& space, int up_to, int digits = 40);

}  // namespace pi1lab
