#include <doctest.h>

#include "helpers.hpp"
#include "turaev/family.hpp"
#include "turaev/jones.hpp"
#include "turaev/turaev.hpp"

using namespace turaev;

TEST_CASE("alternating diagrams have Turaev genus zero") {
  for (const auto& d : {testutil::trefoil(), testutil::figure_eight()}) {
    CHECK(is_alternating(d));
    auto g = turaev_genus_diagram(d);
    CHECK(g.g_T_diagram == 0);
    REQUIRE(g.certified_link_genus);
    CHECK(*g.certified_link_genus == 0);
    CHECK(g.certificate == "alternating");
  }
}

TEST_CASE("pretzel diagrams have Turaev genus two") {
  auto d = generate({3, 3, 5, 3, 3});
  CHECK_FALSE(is_alternating(d));
  auto g = turaev_genus_diagram(d);
  CHECK(g.c == 17);
  CHECK(g.g_T_diagram == 2);
  CHECK_FALSE(g.certified_link_genus);
  auto cert = certify_genus_two(d, jones(d));
  CHECK(cert.certified);
  CHECK(cert.genus == 2);
}

TEST_CASE("the certificate refuses unit extreme coefficients") {
  auto d = braid_closure(3, {1, 1, 1, -2, 1, -2});
  auto cert = certify_genus_two(d, jones(d));
  CHECK_FALSE(cert.certified);
  CHECK_FALSE(cert.reason.empty());
}

TEST_CASE("split diagrams are rejected") {
  CHECK_THROWS_AS(turaev_genus_diagram(disjoint_union(testutil::trefoil(), testutil::trefoil())), DiagramError);
}

TEST_CASE("genus report JSON") {
  auto j = to_json(turaev_genus_diagram(testutil::trefoil()));
  CHECK(j["c"] == 3);
  CHECK(j["sA"] == 2);
  CHECK(j["sB"] == 3);
  CHECK(j["g_T_diagram"] == 0);
}
