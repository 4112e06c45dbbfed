#include <doctest.h>

#include <random>

#include "matpow/parse.hpp"

using namespace matpow;

TEST_CASE("rational literals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("3/2") == Rational(Integer(3), Integer(2)));
  CHECK(parse_rational("-4/6") == Rational(Integer(-2), Integer(3)));
  CHECK_THROWS_AS(parse_rational(""), parse_error);
  CHECK_THROWS_AS(parse_rational("/2"), parse_error);
  CHECK_THROWS_AS(parse_rational("3/"), parse_error);
  CHECK_THROWS_AS(parse_rational("x"), parse_error);
  CHECK_THROWS_AS(parse_rational("1/0"), division_by_zero);
}

TEST_CASE("gaussian literals") {
  CHECK(parse_gaussian("3") == GaussianRational(3));
  CHECK(parse_gaussian("i") == GaussianRational::i());
  CHECK(parse_gaussian("-i") == -GaussianRational::i());
  CHECK(parse_gaussian("2i") == GaussianRational(Rational(0), Rational(2)));
  CHECK(parse_gaussian("1+i") == GaussianRational(Rational(1), Rational(1)));
  CHECK(parse_gaussian("3-2i") == GaussianRational(Rational(3), Rational(-2)));
  CHECK(parse_gaussian("3/2+1/4i") ==
        GaussianRational(Rational(Integer(3), Integer(2)), Rational(Integer(1), Integer(4))));
  CHECK(parse_gaussian("1/2-3/4i") ==
        GaussianRational(Rational(Integer(1), Integer(2)), Rational(Integer(-3), Integer(4))));
  CHECK_THROWS_AS(parse_gaussian(""), parse_error);
  CHECK_THROWS_AS(parse_gaussian("1i+2"), parse_error);
  CHECK_THROWS_AS(parse_gaussian("junk"), parse_error);
}

TEST_CASE("matrix literals") {
  const auto m = parse_mat2_rational("1,1,1,0");
  CHECK((m == Mat2<Rational>{1, 1, 1, 0}));
  const auto q = parse_mat2_rational("1/2,-3,0,2/4");
  CHECK(q.a == Rational(Integer(1), Integer(2)));
  CHECK(q.d == Rational(Integer(1), Integer(2)));
  CHECK_THROWS_AS(parse_mat2_rational("1,2,3"), parse_error);
  CHECK_THROWS_AS(parse_mat2_rational("1,2,3,4,5"), parse_error);
  const auto g = parse_mat2_gaussian("1+i,i,i,1");
  CHECK(g.a == GaussianRational(Rational(1), Rational(1)));
  CHECK(g.d == GaussianRational(1));
}

TEST_CASE("parse/render round trip on random gaussian values") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<long long> num(-9, 9);
  std::uniform_int_distribution<long long> den(1, 9);
  for (int it = 0; it < 200; ++it) {
    const GaussianRational g(Rational(Integer(num(rng)), Integer(den(rng))),
                             Rational(Integer(num(rng)), Integer(den(rng))));
    CHECK(parse_gaussian(g.to_string()) == g);
  }
}
