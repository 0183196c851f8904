#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pi1lab/rational.hpp"
#include "pi1lab/surd.hpp"
#include "support.hpp"

#include <cmath>

using namespace pi1lab;

TEST_CASE("rationals are canonical") {
  CHECK(make_rational(2, -4) == make_rational(-1, 2));
  CHECK(to_string(make_rational(6, 3)) == "2");
  CHECK(to_string(make_rational(-3, 9)) == "-1/3");
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  CHECK(pow10(3) == 1000);
  CHECK(pow10(-2) == make_rational(1, 100));
}

TEST_CASE("parse_rational accepts num/den and rejects decimals") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/4") == make_rational(-3, 4));
  CHECK(parse_rational("+6/8") == make_rational(3, 4));
  CHECK_THROWS_WITH_AS(parse_rational("0.5"), doctest::Contains("write num/den"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/3"), std::invalid_argument);
}

TEST_CASE("floor and ceil") {
  CHECK(floor(make_rational(7, 2)) == 3);
  CHECK(ceil(make_rational(7, 2)) == 4);
  CHECK(floor(make_rational(-7, 2)) == -4);
  CHECK(ceil(make_rational(-7, 2)) == -3);
  CHECK(floor(Rational(5)) == 5);
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(to_decimal(make_rational(1, 8), 2) == "0.12");
  CHECK(to_decimal(make_rational(3, 8), 2) == "0.38");
  CHECK(to_decimal(make_rational(5, 2), 0) == "2");
  CHECK(to_decimal(make_rational(7, 2), 0) == "4");
  CHECK(to_decimal(make_rational(-1, 8), 2) == "-0.12");
  CHECK(to_decimal(make_rational(1, 3), 5) == "0.33333");
  CHECK(to_decimal(make_rational(2, 3), 5) == "0.66667");
  CHECK(to_decimal(Rational(0), 3) == "0.000");
}

TEST_CASE("exact square roots") {
  CHECK(is_perfect_square(make_rational(9, 4)));
  CHECK(exact_sqrt(make_rational(9, 4)) == make_rational(3, 2));
  CHECK_FALSE(is_perfect_square(Rational(2)));
  CHECK_FALSE(is_perfect_square(Rational(-4)));
}

TEST_CASE("surd normal form and arithmetic") {
  const Surd r2 = Surd::sqrt(2);
  CHECK_FALSE(r2.is_rational());
  CHECK(r2.to_string() == "1*sqrt(2)");
  CHECK(Surd(make_rational(1, 2), -3, 5).to_string() == "1/2 - 3*sqrt(5)");
  CHECK(Surd::sqrt(make_rational(1, 4)).is_rational());
  CHECK(Surd::sqrt(make_rational(1, 4)) == Surd(make_rational(1, 2)));
  CHECK(Surd::sqrt(8) == Surd(0, 2, 2));
  CHECK(Surd::sqrt(make_rational(1, 2)) == Surd(0, make_rational(1, 2), 2));
  CHECK((r2 * r2) == Surd(2));
  CHECK((r2 + r2) == Surd::sqrt(8));
  CHECK((r2 - r2) == Surd(0));
  CHECK(r2.sign() == 1);
  CHECK((-r2).sign() == -1);
  CHECK_THROWS_AS(r2.as_rational(), std::domain_error);
  CHECK_THROWS_AS(Surd::sqrt(-1), std::domain_error);
}

TEST_CASE("surd comparison across radicands") {
  CHECK(Surd::sqrt(2) < Surd::sqrt(3));
  CHECK(Surd(make_rational(7, 5)) < Surd::sqrt(2));
  CHECK(Surd::sqrt(2) < Surd(make_rational(3, 2)));
  CHECK(Surd(1, 1, 2) > Surd(0, 1, 5));  // 2.414 > 2.236
  CHECK(Surd(3, -1, 2) < Surd(0, 1, 3));  // 1.586 < 1.732
}

TEST_CASE("surd decimals") {
  CHECK(Surd::sqrt(2).to_decimal(10) == "1.4142135624");
  CHECK(Surd(1, -1, 2).to_decimal(6) == "-0.414214");
  CHECK(Surd::sqrt(make_rational(1, 4)).to_decimal(3) == "0.500");
  CHECK(Surd::sqrt(2).floor_scaled(3) == 1414);
}

TEST_CASE("property: surd ordering agrees with floating point on separated values") {
  Rng rng(11);
  for (int k = 0; k < 500; ++k) {
    const Surd x(testing::small_rational(rng), testing::small_rational(rng), rng.below(20) + 1);
    const Surd y(testing::small_rational(rng), testing::small_rational(rng), rng.below(20) + 1);
    const double dx = testing::approx(x);
    const double dy = testing::approx(y);
    if (std::abs(dx - dy) > 1e-9) {
      CHECK((x < y) == (dx < dy));
    }
    CHECK((x <=> x) == std::strong_ordering::equal);
  }
}

TEST_CASE("property: compare_sqrt_sum matches floating point") {
  Rng rng(12);
  for (int k = 0; k < 500; ++k) {
    const Rational l = make_rational(rng.below(400), rng.below(9) + 1);
    const Rational x = make_rational(rng.below(100), rng.below(9) + 1);
    const Rational y = make_rational(rng.below(100), rng.below(9) + 1);
    const double diff = std::sqrt(l.get_d()) - std::sqrt(x.get_d()) - std::sqrt(y.get_d());
    if (std::abs(diff) > 1e-9) {
      CHECK(compare_sqrt_sum(l, x, y) == (diff > 0 ? 1 : -1));
    }
  }
  CHECK(compare_sqrt_sum(4, 1, 1) == 0);
  CHECK(compare_sqrt_sum(9, 1, 4) == 0);
}
