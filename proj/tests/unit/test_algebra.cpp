#include <doctest.h>

#include "helpers.hpp"
#include "turaev/algebra.hpp"

using namespace turaev;
using testutil::poly;
using testutil::poly2;

TEST_CASE("laurent arithmetic prunes zeros") {
  auto p = poly({{1, 1}, {-1, 1}});   // A + A^-1
  auto q = poly({{1, 1}, {-1, -1}});  // A - A^-1
  CHECK(p * q == poly({{2, 1}, {-2, -1}}));
  CHECK((p - p).is_zero());
  CHECK(p.pow(2) == poly({{2, 1}, {0, 2}, {-2, 1}}));
  CHECK(p.pow(0) == LaurentPoly1::constant(1));
  CHECK(p.shifted(3) == poly({{4, 1}, {2, 1}}));
  CHECK(p.scale_exponents(-2) == poly({{-2, 1}, {2, 1}}));
}

TEST_CASE("degree stats and rendering use the stored unit") {
  auto v = poly({{11, 2}, {9, -4}, {-11, -2}}, 2);
  auto st = v.degree_stats();
  CHECK(st.max_degree == Rational(11, 2));
  CHECK(st.min_degree == Rational(-11, 2));
  CHECK(st.leading_coeff == 2);
  CHECK(st.trailing_coeff == -2);
  CHECK(v.to_string("t") == "2*t^(11/2) - 4*t^(9/2) - 2*t^(-11/2)");
  CHECK(poly({{0, 1}}).to_string("A") == "1");
  CHECK(LaurentPoly1().to_string("A") == "0");
  CHECK_THROWS_AS(LaurentPoly1().degree_stats(), AlgebraError);
}

TEST_CASE("mixing units is rejected") {
  auto a = poly({{1, 1}}, 1);
  auto t = poly({{1, 1}}, 2);
  CHECK_THROWS_AS(a + t, AlgebraError);
  CHECK(t.with_denominator(1) == a);
}

TEST_CASE("coefficients grow past 64 bits exactly") {
  auto p = poly({{1, 1}, {0, 1}}).pow(80);
  Integer binom = 1;
  for (int i = 0; i < 40; ++i) binom = binom * (80 - i) / (i + 1);
  CHECK(p.coeff(40) == binom);
  CHECK(binom > Integer(std::numeric_limits<std::int64_t>::max()));
  CHECK(integer_to_json(binom).is_string());
  CHECK(integer_to_json(Integer(-5)) == -5);
}

TEST_CASE("rationals print reduced") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("two-variable polynomials") {
  auto p = poly2({{1, 2, 1}, {-1, 2, 1}, {0, 0, -1}});
  CHECK(p.z_degree() == 2);
  CHECK(p.z_coefficient(2) == poly({{1, 1}, {-1, 1}}));
  CHECK(p.invert_a() == p);
  CHECK(p.shifted(1, -1) == poly2({{2, 1, 1}, {0, 1, 1}, {1, -1, -1}}));
  CHECK(p.to_string() == "a*z^2 + a^-1*z^2 - 1");
  CHECK_THROWS_AS(LaurentPoly2().z_degree(), AlgebraError);
  // a -> -x^3, z -> x + x^-1
  auto z = poly({{1, 1}, {-1, 1}});
  CHECK(poly2({{0, 1, 1}}).specialize(-1, 3, z) == z);
  CHECK(poly2({{1, 0, 1}}).specialize(-1, 3, z) == poly({{3, -1}}));
}
