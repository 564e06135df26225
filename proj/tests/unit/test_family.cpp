#include <doctest.h>

#include "helpers.hpp"
#include "turaev/family.hpp"
#include "turaev/reproduce.hpp"

using namespace turaev;

TEST_CASE("component counts match the parity table") {
  for (int mask = 0; mask < 32; ++mask) {
    FamilyParams p{2 + (mask >> 4 & 1), 2 + (mask >> 3 & 1), 2 + (mask >> 2 & 1), 2 + (mask >> 1 & 1), 2 + (mask & 1)};
    CAPTURE(p.to_string());
    auto d = generate(p);
    CHECK(d.component_count() == components_by_parity(p));
    CHECK(d.crossing_count() == p.crossings());
    for (const auto& x : d.crossings()) CHECK(x.region >= 0);
  }
}

TEST_CASE("golden Jones polynomial") {
  auto r = evaluate_family({3, 3, 5, 3, 3});
  CHECK(r.jones.polynomial == golden_jones());
  CHECK(r.jones.polynomial.to_string("t") ==
        "2*t^(11/2) - 4*t^(9/2) + 7*t^(7/2) - 12*t^(5/2) + 14*t^(3/2) - 17*t^(1/2) + 16*t^(-1/2) - "
        "13*t^(-3/2) + 11*t^(-5/2) - 7*t^(-7/2) + 3*t^(-9/2) - 2*t^(-11/2)");
  CHECK(r.failed_checks.empty());
  CHECK(r.c == 17);
  CHECK(r.writhe == -1);
  CHECK(r.span == Rational(11));
  CHECK(r.gT == 2);
  CHECK(r.delta == Rational(4));
}

TEST_CASE("same-parity grid tuples satisfy every closed form") {
  for (FamilyParams p : {FamilyParams{2, 2, 4, 2, 2}, FamilyParams{2, 2, 5, 2, 2}, FamilyParams{3, 3, 6, 3, 3}}) {
    CAPTURE(p.to_string());
    auto r = family_report(p);
    CHECK(r.delta == Rational(p.s + p.v - 2));
    CHECK(r.writhe == target_writhe(p));
  }
}

TEST_CASE("mixed-parity tuples cannot reach the target writhe") {
  for (FamilyParams p : {FamilyParams{2, 2, 5, 3, 3}, FamilyParams{3, 3, 5, 2, 2}}) {
    CAPTURE(p.to_string());
    for (const auto& d : family_orientations(p)) CHECK(d.writhe() != target_writhe(p));
    auto r = evaluate_family(p);
    CHECK(r.failed_checks == std::vector<std::string>{"writhe is not t-2r", "Jones degrees differ from the closed forms"});
    CHECK(r.span == Rational(p.r + p.t + p.u));
    CHECK(r.delta == Rational(p.s + p.v - 2));
    CHECK_THROWS_AS(family_report(p), FamilyCheckError);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(generate({1, 2, 2, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_family({2, 3, 5, 2, 2}), std::invalid_argument);
  CHECK_NOTHROW(generate({2, 3, 2, 4, 2}));
}

TEST_CASE("report serialization") {
  auto r = evaluate_family({2, 2, 4, 2, 2});
  auto j = to_json(r);
  CHECK(j["delta"] == "2");
  CHECK(j["checks"] == "ok");
  CHECK(family_csv_header().rfind("r,s,t,u,v,", 0) == 0);
  CHECK(family_csv_row(r) == "2,2,4,2,2,0,0,0,0,0,4,12,0,8,2,2,-2,-2,ok");
}
