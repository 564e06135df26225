#include <doctest.h>

#include "helpers.hpp"
#include "turaev/bracket.hpp"
#include "turaev/budget.hpp"
#include "turaev/family.hpp"
#include "turaev/kauffman2.hpp"

using namespace turaev;
using testutil::poly;
using testutil::poly2;

namespace {

// Links have z^-1 terms, so compare z^k Lambda with (A + A^-1)^k <D>.
constexpr int kClear = 6;

LaurentPoly1 specialize_cleared(const LaurentPoly2& l) { return l.shifted(0, kClear).specialize(-1, 3, poly({{1, 1}, {-1, 1}})); }

LaurentPoly1 bracket_cleared(const Diagram& d) { return bracket(d) * poly({{1, 1}, {-1, 1}}).pow(kClear); }

}  // namespace

TEST_CASE("unknot, unlink and kinks") {
  CHECK(kauffman_lambda(Diagram::unknot()) == LaurentPoly2::constant(1));
  CHECK(kauffman_lambda(Diagram::unlink(2)) == kauffman_delta());
  CHECK(kauffman_delta() == poly2({{1, -1, 1}, {-1, -1, 1}, {0, 0, -1}}));
  CHECK(kauffman_lambda(testutil::kink()) == poly2({{1, 0, 1}}));
  CHECK(kauffman_lambda(testutil::kink().mirror()) == poly2({{-1, 0, 1}}));
  CHECK(kauffman_f(testutil::kink()) == LaurentPoly2::constant(1));
}

TEST_CASE("trefoil") {
  auto t = testutil::trefoil();
  // -2a^-2 - a^-4 + (a^-3 + a^-5) z + (a^-2 + a^-4) z^2
  auto f = poly2({{-2, 0, -2}, {-4, 0, -1}, {-3, 1, 1}, {-5, 1, 1}, {-2, 2, 1}, {-4, 2, 1}});
  CHECK(kauffman_f(t) == f);
  CHECK(kauffman_f(t.mirror()) == f.invert_a());
  CHECK(kauffman_f(parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]")) == f);
  CHECK(z_degree(kauffman_lambda(t)) == 2);
}

TEST_CASE("figure-eight") {
  auto l = kauffman_lambda(testutil::figure_eight());
  auto expected = poly2({{-2, 0, -1}, {0, 0, -1}, {2, 0, -1}, {-1, 1, -1}, {1, 1, -1},
                         {-2, 2, 1}, {0, 2, 2}, {2, 2, 1}, {-1, 3, 1}, {1, 3, 1}});
  CHECK(l == expected);
  CHECK(l.z_coefficient(3) == poly({{1, 1}, {-1, 1}}));
}

TEST_CASE("specializes to the bracket") {
  for (const auto& d : {testutil::trefoil(), testutil::figure_eight(), testutil::hopf(),
                        braid_closure(3, {1, 1, -2, 1, 1, -2, -2}), generate({2, 2, 2, 2, 2})})
    CHECK(specialize_cleared(kauffman_lambda(d)) == bracket_cleared(d));
}

TEST_CASE("skein relation at every crossing") {
  auto d = braid_closure(3, {1, 1, -2, 1, -2, -2, 1});
  for (int i = 0; i < d.crossing_count(); ++i) {
    auto lhs = kauffman_lambda(d) + kauffman_lambda(d.switch_crossing(i));
    auto rhs = (kauffman_lambda(d.smooth(i, Resolution::A)) + kauffman_lambda(d.smooth(i, Resolution::B))) *
               LaurentPoly2::monomial(1, 0, 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("F is multiplicative under connected sum") {
  auto t = testutil::trefoil(), e = testutil::figure_eight();
  CHECK(kauffman_f(connected_sum(t, t)) == kauffman_f(t).pow(2));
  CHECK(kauffman_f(connected_sum(t, e)) == kauffman_f(t) * kauffman_f(e));
}

TEST_CASE("pretzel z-degrees") {
  // Frozen values: n - 3 for both diagrams.
  CHECK(z_degree(kauffman_lambda(generate({2, 2, 2, 2, 2}))) == 7);
  CHECK(z_degree(kauffman_lambda(generate({2, 2, 3, 2, 2}))) == 8);
}

TEST_CASE("bridges and bounds") {
  CHECK(longest_bridge(testutil::trefoil()) == 1);
  CHECK(longest_bridge(braid_closure(2, {1, 1, 1}).switch_crossing(0)) == 3);
  auto s = connected_sum(testutil::trefoil(), testutil::figure_eight());
  CHECK(connected_sum_factors(s).size() == 2);
  CHECK(factor_bridges(s) == std::vector<int>{1, 1});
  auto d = generate({2, 2, 3, 2, 2});
  auto bc = thistlethwaite_check(d, kauffman_lambda(d));
  CHECK(bc.ok);
  CHECK(bc.n == 11);
  auto bad = thistlethwaite_check(testutil::trefoil(), poly2({{0, 3, 1}}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.violations.size() == 1);
}

TEST_CASE("canonical codes ignore labels and orientation") {
  auto d = testutil::figure_eight();
  CHECK(canonical_code(d) == canonical_code(d.reverse_components({0})));
  CHECK(canonical_code(parse_pd(d.to_pd())) == canonical_code(d));
  CHECK(canonical_code(testutil::trefoil()) != canonical_code(testutil::trefoil().mirror()));
}

TEST_CASE("skein budget") {
  CHECK_THROWS_AS(kauffman_lambda(generate({2, 2, 2, 2, 2}), 3), BudgetError);
  KauffmanEvaluator ev(1000000);
  ev.lambda(testutil::figure_eight());
  CHECK(ev.memo_size() > 0);
}

TEST_CASE("report JSON") {
  auto j = to_json(kauffman_report(testutil::trefoil()));
  CHECK(j["z_degree"] == 2);
  CHECK(j["bounds_check"]["ok"] == true);
  CHECK(j["f"] == "a^-2*z^2 + a^-4*z^2 + a^-3*z + a^-5*z - 2*a^-2 - a^-4");
}
