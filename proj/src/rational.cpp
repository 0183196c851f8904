#include "pi1lab/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace pi1lab {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Rational pow10(long exponent) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) {
    return Rational(p);
  }
  return make_rational(Integer(1), p);
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.find('.') != std::string_view::npos) {
    throw std::invalid_argument("decimal literal '" + std::string(text) +
                                "' is not accepted; write num/den");
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (negative) {
    n = -n;
  }
  return make_rational(n, d);
}

std::string to_string(const Rational& q) {
  return q.get_str(10);
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string format_scaled(const Integer& scaled, int digits) {
  Integer mag = abs(scaled);
  std::string s = mag.get_str(10);
  if (static_cast<int>(s.size()) <= digits) {
    s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
  }
  if (digits > 0) {
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (scaled < 0) {
    s.insert(0, "-");
  }
  return s;
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 0) {
    throw std::invalid_argument("negative digit count");
  }
  Rational scaled = q * pow10(digits);
  Integer f = floor(scaled);
  Rational frac = scaled - Rational(f);
  int half = cmp(frac, make_rational(1, 2));
  if (half > 0 || (half == 0 && mpz_odd_p(f.get_mpz_t()) != 0)) {
    f += 1;
  }
  return format_scaled(f, digits);
}

bool is_perfect_square(const Rational& q) {
  return sgn(q) >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

Rational exact_sqrt(const Rational& q) {
  if (!is_perfect_square(q)) {
    throw std::domain_error("square root of " + to_string(q) + " is irrational");
  }
  Integer n;
  Integer d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return make_rational(n, d);
}

}  // namespace pi1lab
