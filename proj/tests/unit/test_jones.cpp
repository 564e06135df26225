#include <doctest.h>

#include "helpers.hpp"
#include "turaev/bracket.hpp"
#include "turaev/jones.hpp"

using namespace turaev;
using testutil::poly;

TEST_CASE("jones of standard knots and links") {
  CHECK(jones(Diagram::unknot()).polynomial == poly({{0, 1}}, 2));
  CHECK(jones(testutil::kink()).polynomial == poly({{0, 1}}, 2));
  // t + t^3 - t^4
  CHECK(jones(testutil::trefoil()).polynomial == poly({{2, 1}, {6, 1}, {8, -1}}, 2));
  CHECK(jones(testutil::figure_eight()).polynomial == poly({{4, 1}, {2, -1}, {0, 1}, {-2, -1}, {-4, 1}}, 2));
  // -t^(1/2) - t^(5/2)
  CHECK(jones(testutil::hopf()).polynomial == poly({{1, -1}, {5, -1}}, 2));
  CHECK(jones(testutil::hopf().reverse_components({1})).polynomial == poly({{-1, -1}, {-5, -1}}, 2));
}

TEST_CASE("jones report fields") {
  auto r = jones(testutil::trefoil());
  CHECK(r.max_deg == Rational(4));
  CHECK(r.min_deg == Rational(1));
  CHECK(r.span == Rational(3));
  CHECK(r.a_M == -1);
  CHECK(r.a_m == 1);
}

TEST_CASE("mirror image") {
  auto t = testutil::trefoil();
  CHECK(jones(t.mirror()).polynomial == mirror_t(jones(t).polynomial));
  CHECK(mirror_t(mirror_t(jones(t).polynomial)) == jones(t).polynomial);
}

TEST_CASE("jones is multiplicative under connected sum") {
  auto t = testutil::trefoil(), e = testutil::figure_eight();
  CHECK(jones(connected_sum(t, e)).polynomial == jones(t).polynomial * jones(e).polynomial);
}

TEST_CASE("closed-form degrees need the strict regime") {
  auto ex = extreme_degrees({3, 3, 5, 3, 3});
  CHECK(ex.max_deg == Rational(11, 2));
  CHECK(ex.min_deg == Rational(-11, 2));
  CHECK_THROWS_AS(extreme_degrees({3, 2, 5, 3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(extreme_degrees({3, 3, 4, 3, 3}), std::invalid_argument);
}

TEST_CASE("defect") {
  CHECK(defect(17, 2, Rational(11)) == Rational(4));
  CHECK(defect(3, 0, Rational(3)) == Rational(0));
}
