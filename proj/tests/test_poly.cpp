#include <doctest.h>

#include <random>
#include <vector>

#include "matpow/poly.hpp"
#include "matpow/rational.hpp"

using namespace matpow;
using IPoly = Poly<Integer>;
using QPoly = Poly<Rational>;

namespace {

IPoly random_poly(std::mt19937_64& rng) {
  static const char* vars[] = {"x", "y"};
  std::uniform_int_distribution<int> coeff(-5, 5), terms(0, 4), exp(0, 3), which(0, 1);
  IPoly p;
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    Monomial m = Monomial::var(vars[which(rng)], static_cast<unsigned>(exp(rng))) *
                 Monomial::var(vars[which(rng)], static_cast<unsigned>(exp(rng)));
    p += IPoly::term(m, Integer(coeff(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("poly arithmetic basics") {
  const IPoly x = IPoly::var("x");
  CHECK((x + IPoly(1)) * (x + IPoly(1)) == x * x + IPoly(2) * x + IPoly(1));
  CHECK((x + IPoly(1)) * (x + IPoly(1)) == int_pow(x + IPoly(1), 2));
}

TEST_CASE("poly product with zero and coefficient extraction") {
  const IPoly x = IPoly::var("x"), y = IPoly::var("y");
  const IPoly p = IPoly(2) * x * x * y;
  CHECK(p * IPoly(0) == IPoly(0));
  CHECK(p.coefficient_of(Monomial::var("x", 2) * Monomial::var("y")) == Integer(2));
  CHECK(p.coefficient_of(Monomial::var("x") * Monomial::var("y")) == Integer(0));
  const IPoly e = IPoly::var("e"), f = IPoly::var("f");
  const IPoly square = (e + IPoly(2) * f) * (e + IPoly(2) * f);
  CHECK(square.coefficient_of(Monomial::var("e") * Monomial::var("f")) == Integer(4));
}

TEST_CASE("substitute evaluates and maps variables") {
  const IPoly T = IPoly::var("T"), D = IPoly::var("D");
  const IPoly disc = T * T - IPoly(4) * D;
  CHECK(disc.substitute("T", IPoly(1)).substitute("D", IPoly(-1)) == IPoly(5));
  CHECK(IPoly::var("w").substitute("w", IPoly(0)) == IPoly(0));

  // replace e by e/2 over rational coefficients
  const QPoly e = QPoly::var("e"), f = QPoly::var("f");
  const QPoly cube = int_pow(e + QPoly(2) * f, 3);
  const QPoly halved = cube.substitute("e", QPoly(Rational(Integer(1), Integer(2))) * e);
  CHECK(halved.coefficient_of(Monomial::var("f", 3)) == Rational(8));
  CHECK(halved.coefficient_of(Monomial::var("e", 3)) == Rational(Integer(1), Integer(8)));
  CHECK(halved.coefficient_of(Monomial::var("e", 2) * Monomial::var("f")) ==
        Rational(Integer(3), Integer(2)));
  CHECK(halved.coefficient_of(Monomial::var("e") * Monomial::var("f", 2)) == Rational(6));
}

TEST_CASE("is_zero and structural equality") {
  const IPoly x = IPoly::var("x"), y = IPoly::var("y");
  CHECK(((x + IPoly(1)) * (x - IPoly(1)) - (x * x - IPoly(1))).is_zero());
  CHECK(!(x - y).is_zero());
}

TEST_CASE("reduce_sin_cos rewrites s powers") {
  const IPoly s = IPoly::var("s"), c = IPoly::var("c");
  CHECK((s * s).reduce_sin_cos("s", "c") == IPoly(1) - c * c);
  CHECK((s * s * s * c).reduce_sin_cos("s", "c") == s * c - s * c * c * c);
  const IPoly c5 = int_pow(c, 5);
  CHECK(c5.reduce_sin_cos("s", "c") == c5);
}

TEST_CASE("reduce_sin_cos is idempotent and congruence preserving") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> coeff(-4, 4), se(0, 5), ce(0, 3);
  // exact points on the unit circle: s = 2t/(1+t^2), c = (1-t^2)/(1+t^2)
  std::vector<std::pair<Rational, Rational>> points;
  for (long long t = 1; t <= 20; ++t) {
    const Integer t2 = Integer(t * t);
    points.emplace_back(Rational(Integer(2 * t), t2 + Integer(1)),
                        Rational(Integer(1) - t2, t2 + Integer(1)));
  }
  for (int it = 0; it < 40; ++it) {
    IPoly p;
    for (int k = 0; k < 4; ++k)
      p += IPoly::term(Monomial::var("s", static_cast<unsigned>(se(rng))) *
                           Monomial::var("c", static_cast<unsigned>(ce(rng))),
                       Integer(coeff(rng)));
    const IPoly r = p.reduce_sin_cos("s", "c");
    CHECK(r.reduce_sin_cos("s", "c") == r);
    for (const auto& [sv, cv] : points) {
      const QPoly pq = poly_cast<Rational>(p).substitute("s", QPoly(sv)).substitute("c", QPoly(cv));
      const QPoly rq = poly_cast<Rational>(r).substitute("s", QPoly(sv)).substitute("c", QPoly(cv));
      CHECK(pq == rq);
    }
  }
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 300; ++it) {
    const IPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("substitute is a ring homomorphism") {
  std::mt19937_64 rng(78);
  const IPoly value = IPoly::var("y") + IPoly(1);
  for (int it = 0; it < 200; ++it) {
    const IPoly p = random_poly(rng), q = random_poly(rng);
    CHECK((p * q).substitute("x", value) ==
          p.substitute("x", value) * q.substitute("x", value));
    CHECK((p + q).substitute("x", value) ==
          p.substitute("x", value) + q.substitute("x", value));
  }
}

TEST_CASE("deterministic rendering") {
  const IPoly x = IPoly::var("x"), y = IPoly::var("y");
  const IPoly p = IPoly(3) * x * x - y + IPoly(1);
  CHECK(p.to_string() == "1 + 3*x^2 - y");
  CHECK(IPoly(0).to_string() == "0");
  CHECK((IPoly(0) - x).to_string() == "-x");
}
