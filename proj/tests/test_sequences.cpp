#include <doctest.h>

#include "matpow/sequences.hpp"

using namespace matpow;
using IMat = Mat2<Integer>;
using IPoly = Poly<Integer>;

TEST_CASE("fibonacci values and backward extension") {
  CHECK(fibonacci(0) == Integer(0));
  CHECK(fibonacci(1) == Integer(1));
  CHECK(fibonacci(10) == Integer(55));
  CHECK(fibonacci(-1) == Integer(1));
  CHECK(fibonacci(60).to_string() == "1548008755920");
}

TEST_CASE("fibonacci matrix tabulation") {
  const IMat fib{1, 1, 1, 0};
  for (long long n = 1; n <= 30; ++n) {
    const IMat p = pow_naive(fib, n);
    CHECK(p.a == fibonacci(n + 1));
    CHECK(p.b == fibonacci(n));
    CHECK(p.c == fibonacci(n));
    CHECK(p.d == fibonacci(n - 1));
  }
}

TEST_CASE("lucas values and relation to fibonacci") {
  CHECK(lucas(1) == Integer(1));
  CHECK(lucas(2) == Integer(3));
  CHECK(lucas(7) == Integer(29));
  for (long long n = 1; n <= 30; ++n) CHECK(lucas(n) == fibonacci(n + 1) + fibonacci(n - 1));
}

TEST_CASE("pell pairs") {
  CHECK(pell_pair(Integer(2), Integer(3), Integer(2), 1) ==
        std::pair<Integer, Integer>(Integer(3), Integer(2)));
  CHECK(pell_pair(Integer(2), Integer(3), Integer(2), 2) ==
        std::pair<Integer, Integer>(Integer(17), Integer(12)));
  CHECK(pell_pair(Integer(3), Integer(2), Integer(1), 3) ==
        std::pair<Integer, Integer>(Integer(26), Integer(15)));
  CHECK_THROWS_AS(pell_pair(Integer(2), Integer(3), Integer(1), 2), precondition_error);
  for (long long n = 1; n <= 10; ++n) {
    const auto [x, y] = pell_pair(Integer(5), Integer(9), Integer(4), n);
    CHECK(x * x - Integer(5) * y * y == Integer(1));
  }
}

TEST_CASE("brahmagupta polynomial pairs") {
  const IPoly x1 = IPoly::var("x1"), y1 = IPoly::var("y1"), t = IPoly::var("t");
  CHECK(brahmagupta_pair(1) == std::pair<IPoly, IPoly>(x1, y1));
  const auto [x2, y2] = brahmagupta_pair(2);
  CHECK(x2 == x1 * x1 + t * y1 * y1);
  CHECK(y2 == IPoly(2) * x1 * y1);
  CHECK(x2 * x2 - t * y2 * y2 == int_pow(x1 * x1 - t * y1 * y1, 2));
}

TEST_CASE("morgan-voyce polynomials") {
  const IPoly x = IPoly::var("x");
  CHECK(morgan_voyce(1).first == x + IPoly(2));
  CHECK(morgan_voyce(2).first == x * x + IPoly(4) * x + IPoly(3));
  CHECK(morgan_voyce(2).second == x * x + IPoly(3) * x + IPoly(1));
  // B_n = (x+2) B_{n-1} - B_{n-2}
  for (long long n = 3; n <= 10; ++n)
    CHECK(morgan_voyce(n).first ==
          (x + IPoly(2)) * morgan_voyce(n - 1).first - morgan_voyce(n - 2).first);
}

TEST_CASE("chebyshev pairs from the rotation matrix") {
  const IPoly c = IPoly::var("c");
  CHECK(chebyshev_pair(1) == std::pair<IPoly, IPoly>(c, IPoly(1)));
  CHECK(chebyshev_pair(2).first == IPoly(2) * c * c - IPoly(1));
  CHECK(chebyshev_pair(2).second == IPoly(2) * c);
  CHECK(chebyshev_pair(3).first == IPoly(4) * c * c * c - IPoly(3) * c);
  CHECK(chebyshev_pair(3).second == IPoly(4) * c * c - IPoly(1));
  // cos_n^2 + (1-c^2) (sin_n/s)^2 = 1
  for (long long n = 1; n <= 16; ++n) {
    const auto [cosn, sinn] = chebyshev_pair(n);
    CHECK(cosn * cosn + (IPoly(1) - c * c) * sinn * sinn == IPoly(1));
  }
}

TEST_CASE("fixture powers match the printed closed forms and the oracle") {
  CHECK((fixture_power("nilpotent-shift", 4) == IMat{5, 4, -4, -3}));
  CHECK((fixture_power("doubling", 3) == IMat{15, 7, -14, -6}));
  CHECK((fixture_power("fib-sign", 3) == IMat{-5, -2, 2, 1}));
  CHECK(fixture_power("identity", 9) == IMat::identity());
  CHECK_THROWS_AS(fixture_power("no-such-fixture", 2), unknown_fixture);
  for (const auto& fx : fixtures())
    for (long long n = 1; n <= 20; ++n)
      CHECK(fixture_power(fx.name, n) == pow_naive(fx.base, n));
}
