// Randomized checks on braid-closure diagrams with fixed seeds.

#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "turaev/bracket.hpp"
#include "turaev/jones.hpp"
#include "turaev/kauffman2.hpp"
#include "turaev/random.hpp"
#include "turaev/reidemeister.hpp"

using namespace turaev;

TEST_CASE("mirror inverts A in the bracket") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto d = random_connected_diagram(rng, 9);
    CHECK(bracket(d.mirror()) == bracket(d).scale_exponents(-1));
  }
}

TEST_CASE("bracket degrees respect the state bounds") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 150; ++i) {
    auto d = random_connected_diagram(rng, 10);
    auto b = degree_bounds(d);
    auto st = bracket(d).degree_stats();
    CHECK(st.max_degree <= Rational(b.M - 2));
    CHECK(st.min_degree >= Rational(b.m + 2));
  }
  for (int i = 0; i < 50; ++i) {
    auto d = random_alternating_diagram(rng, 10);
    auto b = degree_bounds(d);
    auto st = bracket(d).degree_stats();
    CHECK(st.max_degree == Rational(b.M - 2));
    CHECK(st.min_degree == Rational(b.m + 2));
  }
}

TEST_CASE("random moves preserve the invariants") {
  std::mt19937_64 rng(13);
  int applied = 0;
  for (int i = 0; i < 40; ++i) {
    auto d = random_connected_diagram(rng, 7);
    auto v = jones(d).polynomial;
    auto l = kauffman_lambda(d);
    for (Move m : all_moves()) {
      auto sites = move_sites(d, m);
      if (sites.empty()) continue;
      const auto& s = sites[rng() % sites.size()];
      auto e = apply_move(d, s);
      CAPTURE(d.to_pd());
      CAPTURE(s.describe());
      CHECK(jones(e).polynomial == v);
      auto le = kauffman_lambda(e);
      int kink = 0;
      if (m == Move::RI) kink = s.sign;
      if (m == Move::RIInverse) kink = -d.crossing(s.crossing).sign;
      CHECK(le == l.shifted(kink, 0));
      if (auto lc = check_locality(d, s)) CHECK(lc->consistent);
      ++applied;
    }
  }
  CHECK(applied > 60);
}

TEST_CASE("random words use every generator") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 20; ++i) {
    auto w = random_braid_word(rng, 4, 6);
    CHECK(w.size() == 6);
    std::set<int> gens;
    for (int g : w) gens.insert(std::abs(g));
    CHECK(gens == std::set<int>{1, 2, 3});
  }
}
