#include "pi1lab/surd.hpp"

#include <stdexcept>

namespace pi1lab {

namespace {

int sign_of(const Rational& a, const Rational& b, const Rational& d) {
  int sa = sgn(a);
  int sb = sgn(b);
  if (sb == 0 || sgn(d) == 0) {
    return sa;
  }
  if (sa == 0 || sa == sb) {
    return sb;
  }
  int c = cmp(Rational(a * a), Rational(b * b * d));
  if (c > 0) {
    return sa;
  }
  if (c < 0) {
    return sb;
  }
  return 0;
}

Integer isqrt_floor(const Rational& q) {
  Integer f = floor(q);
  Integer r;
  mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
  return r;
}

}  // namespace

Surd::Surd(const Rational& value) : a_(value) {}

Surd::Surd(const Rational& a, const Rational& b, const Rational& radicand)
    : a_(a), b_(b), d_(radicand) {
  normalize();
}

Surd Surd::sqrt(const Rational& q) {
  if (sgn(q) < 0) {
    throw std::domain_error("square root of negative rational " + pi1lab::to_string(q));
  }
  return Surd(0, 1, q);
}

void Surd::normalize() {
  if (sgn(d_) < 0) {
    throw std::domain_error("negative radicand");
  }
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  // sqrt(p/q) = sqrt(p*q)/q keeps the radicand integral.
  Rational den(d_.get_den());
  if (den != 1) {
    b_ /= den;
    d_ = Rational(d_.get_num() * d_.get_den());
  }
  // Pull out small square factors so equal values print alike.
  Integer radicand = d_.get_num();
  for (unsigned long k = 2; k <= 1000 && k * k <= radicand; ++k) {
    while (mpz_divisible_ui_p(radicand.get_mpz_t(), k * k) != 0) {
      radicand /= k * k;
      b_ *= k;
    }
  }
  d_ = Rational(radicand);
  if (is_perfect_square(d_)) {
    a_ += b_ * exact_sqrt(d_);
    b_ = 0;
    d_ = 0;
  }
}

const Rational& Surd::as_rational() const {
  if (!is_rational()) {
    throw std::domain_error("value " + to_string() + " is irrational");
  }
  return a_;
}

int Surd::sign() const {
  return sign_of(a_, b_, d_);
}

Surd Surd::operator-() const {
  return Surd(-a_, -b_, d_);
}

namespace {

const Rational& shared_radicand(const Surd& x, const Surd& y) {
  if (x.is_rational()) {
    return y.radicand();
  }
  if (y.is_rational() || x.radicand() == y.radicand()) {
    return x.radicand();
  }
  throw std::domain_error("surd arithmetic across different radicands");
}

}  // namespace

Surd operator+(const Surd& x, const Surd& y) {
  const Rational& d = shared_radicand(x, y);
  return Surd(x.a_ + y.a_, x.b_ + y.b_, d);
}

Surd operator-(const Surd& x, const Surd& y) {
  return x + (-y);
}

Surd operator*(const Surd& x, const Surd& y) {
  const Rational& d = shared_radicand(x, y);
  return Surd(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
}

namespace {

// sign(x - y) for arbitrary radicands.
int compare(const Surd& x, const Surd& y) {
  if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand()) {
    return (x - y).sign();
  }
  Rational r = x.rational_part() - y.rational_part();
  const Rational& p = x.surd_coefficient();
  Rational q = -y.surd_coefficient();
  int s_first = sign_of(r, p, x.radicand());
  int s_second = sgn(q);
  if (s_first == 0) {
    return s_second;
  }
  if (s_first == s_second) {
    return s_first;
  }
  // Opposite signs: compare magnitudes by squaring both halves.
  Rational rest = r * r + p * p * x.radicand() - q * q * y.radicand();
  int s = sign_of(rest, Rational(2 * r * p), x.radicand());
  if (s > 0) {
    return s_first;
  }
  if (s < 0) {
    return s_second;
  }
  return 0;
}

}  // namespace

bool operator==(const Surd& x, const Surd& y) {
  return compare(x, y) == 0;
}

std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
  int c = compare(x, y);
  if (c < 0) {
    return std::strong_ordering::less;
  }
  if (c > 0) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Integer Surd::floor_scaled(int digits) const {
  Rational scale = pow10(digits);
  Rational a = a_ * scale;
  Rational b = b_ * scale;
  if (b == 0) {
    return pi1lab::floor(a);
  }
  Integer t = isqrt_floor(Rational(b * b * d_));
  Rational lower = sgn(b) > 0 ? Rational(a + t) : Rational(a - t - 1);
  Integer c = pi1lab::floor(lower);
  while (sign_of(Rational(a - c - 1), b, d_) >= 0) {
    c += 1;
  }
  return c;
}

std::string Surd::to_decimal(int digits) const {
  if (digits < 0) {
    throw std::invalid_argument("negative digit count");
  }
  Integer c = floor_scaled(digits);
  Rational scale = pow10(digits);
  int half = sign_of(Rational(a_ * scale - c - make_rational(1, 2)), Rational(b_ * scale), d_);
  if (half > 0 || (half == 0 && mpz_odd_p(c.get_mpz_t()) != 0)) {
    c += 1;
  }
  return format_scaled(c, digits);
}

std::string Surd::to_string() const {
  if (is_rational()) {
    return pi1lab::to_string(a_);
  }
  std::string out;
  if (a_ != 0) {
    out = pi1lab::to_string(a_) + (sgn(b_) > 0 ? " + " : " - ");
  } else if (sgn(b_) < 0) {
    out = "-";
  }
  out += pi1lab::to_string(abs(b_)) + "*sqrt(" + pi1lab::to_string(d_) + ")";
  return out;
}

int compare_sqrt_sum(const Rational& lhs, const Rational& x, const Rational& y) {
  if (sgn(lhs) < 0 || sgn(x) < 0 || sgn(y) < 0) {
    throw std::domain_error("compare_sqrt_sum needs non-negative arguments");
  }
  // Both sides are non-negative, so compare lhs with (sqrt x + sqrt y)^2.
  return Surd(lhs - x - y, -2, x * y).sign();
}

}  // namespace pi1lab
