// Exact real numbers of the form a + b*sqrt(d) with rational a, b, d.
//
// Distances in the plane are square roots of rationals, and the extrema of
// piecewise-quadratic distance envelopes sit at roots of quadratics. Both land
// in a single quadratic field, so this small type is enough to carry every
// metric value the library produces without floating point.

#pragma once

#include "pi1lab/rational.hpp"

#include <compare>
#include <string>

namespace pi1lab {

class Surd {
 public:
  Surd() = default;
  Surd(const Rational& value);  // NOLINT(google-explicit-constructor)
  Surd(const Rational& a, const Rational& b, const Rational& radicand);

  /// sqrt(q) for q >= 0.
  static Surd sqrt(const Rational& q);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coefficient() const { return b_; }
  /// Square-free-ish integer radicand; 0 when the value is rational.
  const Rational& radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  /// Throws std::domain_error when the value is irrational.
  const Rational& as_rational() const;

  int sign() const;

  Surd operator-() const;
  // Ring operations require a shared radicand (or a rational operand).
  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator*(const Surd& x, const Surd& y);

  friend bool operator==(const Surd& x, const Surd& y);
  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);

  /// floor(value * 10^digits), exact.
  Integer floor_scaled(int digits) const;
  /// Fixed-point rendering rounded half to even.
  std::string to_decimal(int digits) const;
  /// "a", "a/b", or "a + b*sqrt(d)" with canonical rationals.
  std::string to_string() const;

 private:
  void normalize();

  Rational a_;
  Rational b_;
  Rational d_;  // 0 iff b_ == 0
};

/// sign(sqrt(lhs) - (sqrt(x) + sqrt(y))) for non-negative rationals; used to
/// check the triangle inequality on squared distances without rounding.
int compare_sqrt_sum(const Rational& lhs, const Rational& x, const Rational& y);

}  // namespace pi1lab
