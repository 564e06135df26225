#include <doctest.h>

#include "helpers.hpp"
#include "turaev/diagram.hpp"

using namespace turaev;

TEST_CASE("parse the trefoil") {
  auto d = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
  CHECK(d.crossing_count() == 3);
  CHECK(d.component_count() == 1);
  CHECK(d.writhe() == 3);
  CHECK(d.is_connected());
  CHECK(parse_pd(d.to_pd()) == d);
  CHECK(d.faces().size() == 5);
}

TEST_CASE("comments, spaces inside brackets and free loops") {
  auto d = parse_pd("# two pieces\nX[1, 5, 2, 4] X[3,1,4,6]\nX[5,3,6,2] O[7]\n");
  CHECK(d.crossing_count() == 3);
  CHECK(d.free_loops() == 1);
  CHECK(d.component_count() == 2);
  CHECK_FALSE(d.is_connected());
  CHECK(d.piece_count() == 2);
  CHECK(parse_pd("O[1]").component_count() == 1);
}

TEST_CASE("malformed PD codes are rejected") {
  CHECK_THROWS_AS(parse_pd(""), DiagramError);
  CHECK_THROWS_AS(parse_pd("X[1,2,3]"), DiagramError);
  CHECK_THROWS_AS(parse_pd("Y[1,2,3,4]"), DiagramError);
  CHECK_THROWS_AS(parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,6]"), DiagramError);
  CHECK_THROWS_AS(parse_pd("X[1,a,2,4]"), DiagramError);
}

TEST_CASE("orientation of link components") {
  auto h = testutil::hopf();
  CHECK(h.component_count() == 2);
  CHECK(h.writhe() == 2);
  CHECK(h.reverse_components({1}).writhe() == -2);
  CHECK(apply_orientation(h, "c1=+,c2=-").writhe() == -2);
  CHECK(apply_orientation(h, "c1=-,c2=-").writhe() == 2);
  CHECK_THROWS_AS(apply_orientation(h, "c3=-"), DiagramError);
  auto hp = parse_pd("orient: c2=-\n" + h.to_pd());
  CHECK(hp.writhe() == -2);
}

TEST_CASE("mirror, switch and smoothing") {
  auto t = testutil::trefoil();
  CHECK(t.mirror().writhe() == -3);
  CHECK(t.switch_crossing(0).writhe() == 1);
  auto s = t.smooth(0, Resolution::A);
  CHECK(s.crossing_count() == 2);
  auto u = testutil::kink().remove_crossings({0});
  CHECK(u.crossing_count() == 0);
  CHECK(u.component_count() == 1);
}

TEST_CASE("braid closures") {
  CHECK(braid_closure(3, {1}).component_count() == 2);
  CHECK(braid_closure(3, {1, -2, 1, -2}).writhe() == 0);
  CHECK(braid_closure(2, {1, 1}).component_count() == 2);
  CHECK_THROWS(braid_closure(2, {2}));
}

TEST_CASE("connected sum and disjoint union") {
  auto t = testutil::trefoil();
  auto s = connected_sum(t, t);
  CHECK(s.crossing_count() == 6);
  CHECK(s.component_count() == 1);
  CHECK(s.writhe() == 6);
  CHECK(s.is_connected());
  auto u = disjoint_union(t, testutil::figure_eight());
  CHECK(u.component_count() == 2);
  CHECK(u.piece_count() == 2);
  CHECK(u.pieces().size() == 2);
}

TEST_CASE("arc bookkeeping") {
  auto d = testutil::figure_eight();
  for (int a = 0; a < d.arc_count(); ++a) {
    CHECK(d.mate(d.arc_tail(a)) == d.arc_head(a));
    CHECK(d.arc_component(a) == 0);
  }
  CHECK(d.passages().front().size() == 8);
}
