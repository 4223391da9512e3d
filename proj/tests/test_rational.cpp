#include <doctest.h>

#include "minsub/random.hpp"
#include "minsub/rational.hpp"

using namespace minsub;

TEST_CASE("make_rational reduces and normalizes sign") {
  CHECK(make_rational(2, 4).str() == "1/2");
  CHECK(make_rational(3, -6).str() == "-1/2");
  const Rational zero = make_rational(0, 5);
  CHECK(zero.numerator() == 0);
  CHECK(zero.denominator() == 1);
  CHECK(zero.str() == "0");
  CHECK_THROWS_AS(make_rational(1, 0), RationalError);
}

TEST_CASE("parse_rational accepts p/q and integers") {
  CHECK(parse_rational("-3/2") == make_rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("6/-4"), RationalError);
  CHECK(parse_rational("+4/6") == make_rational(2, 3));
  CHECK(parse_rational("123456789012345678901234567890").str() == "123456789012345678901234567890");
  CHECK_THROWS_AS(parse_rational("1/0"), RationalError);
  CHECK_THROWS_AS(parse_rational("1.5"), RationalError);
  CHECK_THROWS_AS(parse_rational(""), RationalError);
  CHECK_THROWS_AS(parse_rational("/3"), RationalError);
  CHECK_THROWS_AS(parse_rational("2/"), RationalError);
}

TEST_CASE("no overflow on large products") {
  Rational big = make_rational(1, 3);
  for (int i = 0; i < 200; ++i) big *= make_rational(1000000007, 998244353);
  Rational back = big;
  for (int i = 0; i < 200; ++i) back /= make_rational(1000000007, 998244353);
  CHECK(back == make_rational(1, 3));
}

TEST_CASE("floor and ceil") {
  CHECK(make_rational(7, 2).floor() == 3);
  CHECK(make_rational(7, 2).ceil() == 4);
  CHECK(make_rational(-7, 2).floor() == -4);
  CHECK(make_rational(-7, 2).ceil() == -3);
  CHECK(Rational(5).floor() == 5);
}

TEST_CASE("dot product") {
  CHECK(dot({1, 0}, {0, 1}) == 0);
  CHECK(dot({make_rational(1, 2), make_rational(1, 2)}, {1, 1}) == 1);
  CHECK(dot({2, 3}, {0, 1}) == 3);
  CHECK_THROWS_AS(dot({1, 2}, {1, 2, 3}), DimensionMismatch);
}

TEST_CASE("field axioms hold exactly on random triples") {
  Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    const Rational a = rng.rational(50, 30);
    const Rational b = rng.rational(50, 30);
    const Rational c = rng.rational(50, 30);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == 0);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("canonical form is idempotent") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Rational a = rng.rational(1000, 1000);
    const Rational again = make_rational(a.numerator(), a.denominator());
    CHECK(again == a);
    CHECK(again.numerator() == a.numerator());
    CHECK(again.denominator() == a.denominator());
    CHECK(parse_rational(a.str()) == a);
  }
}

TEST_CASE("dot is bilinear") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    const Vector u = rng.vector(n, 20, 9);
    const Vector w = rng.vector(n, 20, 9);
    const Vector v = rng.vector(n, 20, 9);
    const Rational t = rng.rational(7, 5);
    CHECK(dot(u + w, v) == dot(u, v) + dot(w, v));
    CHECK(dot(u * t, v) == t * dot(u, v));
    CHECK(dot(u, v) == dot(v, u));
  }
}

TEST_CASE("vector order is lexicographic") {
  CHECK(Vector{0, 5} < Vector{1, -3});
  CHECK(Vector{1, 2} < Vector{1, 3});
  CHECK(Vector{1, 2} == Vector{1, 2});
}
