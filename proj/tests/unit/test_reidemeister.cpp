#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "turaev/jones.hpp"
#include "turaev/reidemeister.hpp"

using namespace turaev;

namespace {

std::set<std::string> decreasing_names(Move m) {
  std::set<std::string> out;
  for (const auto& c : enumerate_decreasing_closures(m)) out.insert(c.name());
  return out;
}

}  // namespace

TEST_CASE("planar matchings") {
  CHECK(planar_matchings(2).size() == 1);
  CHECK(planar_matchings(4).size() == 2);
  CHECK(planar_matchings(6).size() == 5);
  CHECK(closure_name({{0, 1}, {2, 3}}, 4) == "(i)");
  CHECK(closure_name({{0, 2}, {1, 3}}, 4) == "(ii)");
  CHECK_THROWS_AS(closure_name({{0, 3}, {1, 2}}, 4), MoveError);
  CHECK_THROWS_AS(planar_matchings(3), MoveError);
}

TEST_CASE("move names") {
  for (Move m : all_moves()) CHECK(parse_move(to_string(m)) == m);
  CHECK(all_moves().size() == 6);
  CHECK_THROWS(parse_move("RIV"));
}

TEST_CASE("decreasing closures") {
  CHECK(enumerate_decreasing_closures(Move::RI).empty());
  CHECK(enumerate_decreasing_closures(Move::RIInverse).empty());
  CHECK(enumerate_decreasing_closures(Move::RII).empty());
  CHECK(decreasing_names(Move::RIIInverse) == std::set<std::string>{"A(i) B(ii)", "A(ii) B(i)", "A(ii) B(ii)"});
  CHECK(decreasing_names(Move::RIII) ==
        std::set<std::string>{"A(i) B(iv)", "A(ii) B(iv)", "A(iii) B(iv)", "A(iv) B(iv)", "A(v) B(iv)"});
  CHECK(decreasing_names(Move::RIIIMirror) ==
        std::set<std::string>{"A(iv) B(i)", "A(iv) B(ii)", "A(iv) B(iii)", "A(iv) B(iv)", "A(iv) B(v)"});
  CHECK(enumerate_closures(Move::RIII).size() == 25);
}

TEST_CASE("all-B circle counts around an RIII move") {
  const auto closures = planar_matchings(6);
  const int before[5] = {3, 2, 2, 1, 2};
  const int after[5] = {1, 2, 2, 3, 2};
  for (int i = 0; i < 5; ++i) {
    CAPTURE(i);
    CHECK(closure_circles(Move::RIII, Resolution::B, false, closures[static_cast<std::size_t>(i)]) == before[i]);
    CHECK(closure_circles(Move::RIII, Resolution::B, true, closures[static_cast<std::size_t>(i)]) == after[i]);
  }
}

TEST_CASE("inner matchings") {
  CHECK(matching_string(inner_matching(Move::RIIInverse, Resolution::A, false)) == "ab cd");
  CHECK(matching_string(inner_matching(Move::RIIInverse, Resolution::A, true)) == "ac bd");
  CHECK(matching_string(inner_matching(Move::RIIInverse, Resolution::B, false)) == "ab cd");
  CHECK(matching_string(inner_matching(Move::RIIInverse, Resolution::B, true)) == "ac bd");
  CHECK(matching_string(inner_matching(Move::RIII, Resolution::A, false)) == "af be cd");
  CHECK(matching_string(inner_matching(Move::RIII, Resolution::A, true)) == "af be cd");
  CHECK(matching_string(inner_matching(Move::RIII, Resolution::B, false)) == "ab cd ef");
  CHECK(matching_string(inner_matching(Move::RIII, Resolution::B, true)) == "af bc de");
}

TEST_CASE("effects") {
  auto e = analyze_closure({Move::RIII, planar_matchings(6)[0], planar_matchings(6)[3]});
  CHECK(e.delta_c == 0);
  CHECK(e.delta_sB == 2);
  CHECK(e.delta_gT == Rational(-1));
  CHECK(moves_csv_header() == "move,closure_A,closure_B,delta_c,delta_sA,delta_sB,delta_gT");
  CHECK(moves_csv_row({Move::RIII, planar_matchings(6)[0], planar_matchings(6)[3]}, e) == "RIII,(i),(iv),0,0,2,-1");
}

TEST_CASE("moves on the trefoil keep the Jones polynomial") {
  auto t = testutil::trefoil();
  auto v = jones(t).polynomial;
  for (Move m : {Move::RI, Move::RII}) {
    auto sites = move_sites(t, m);
    REQUIRE_FALSE(sites.empty());
    for (const auto& s : sites) {
      auto d = apply_move(t, s);
      CHECK(jones(d).polynomial == v);
      auto lc = check_locality(t, s);
      REQUIRE(lc);
      CHECK(lc->consistent);
      for (Move inv : {Move::RIInverse, Move::RIIInverse})
        for (const auto& back : move_sites(d, inv)) CHECK(jones(apply_move(d, back)).polynomial == v);
    }
  }
  CHECK(move_sites(t, Move::RIII).empty());
  CHECK_THROWS_AS(apply_move(t, MoveSite{Move::RIInverse, -1, 1, false, 0}), MoveError);
}

TEST_CASE("RIII sites exist after an RII") {
  auto d = braid_closure(3, {1, 2, 1});
  auto sites = move_sites(d, Move::RIII);
  sites.insert(sites.end(), move_sites(d, Move::RIIIMirror).begin(), move_sites(d, Move::RIIIMirror).end());
  REQUIRE_FALSE(sites.empty());
  for (const auto& s : sites) CHECK(jones(apply_move(d, s)).polynomial == jones(d).polynomial);
}
