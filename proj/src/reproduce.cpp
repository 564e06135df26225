#include "turaev/reproduce.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "turaev/family.hpp"
#include "turaev/jones.hpp"
#include "turaev/random.hpp"
#include "turaev/reidemeister.hpp"
#include "turaev/turaev.hpp"

namespace turaev {

namespace {

std::vector<FamilyParams> strict_grid() {
  std::vector<FamilyParams> out;
  for (int r : {2, 3})
    for (int u : {2, 3})
      for (int dt : {2, 3}) out.push_back(FamilyParams{r, r, std::max(r, u) + dt, u, u});
  return out;
}

CheckResult result(int id, const std::string& name) {
  CheckResult r;
  r.id = id;
  r.name = name;
  r.details = nlohmann::json::object();
  return r;
}

void finish(CheckResult& r, const std::vector<std::string>& failures, const std::string& ok_summary) {
  r.pass = failures.empty();
  if (r.pass) {
    r.summary = ok_summary;
  } else {
    std::ostringstream out;
    for (std::size_t i = 0; i < failures.size(); ++i) out << (i ? "; " : "") << failures[i];
    r.summary = out.str();
  }
  r.details["failures"] = failures;
}

Diagram trefoil() { return braid_closure(2, {1, 1, 1}); }
Diagram figure_eight() { return braid_closure(3, {1, -2, 1, -2}); }

CheckResult golden(const ReproduceOptions& o) {
  auto r = result(1, "golden-jones");
  const auto v = jones(generate({3, 3, 5, 3, 3}), o.max_states).polynomial;
  const auto g = golden_jones();
  std::vector<std::string> failures;
  std::string chirality;
  if (v == g)
    chirality = "same chirality";
  else if (mirror_t(v) == g)
    chirality = "mirror (t -> 1/t)";
  else
    failures.push_back("computed " + v.to_string("t") + " differs from " + g.to_string("t"));
  r.details["computed"] = v.to_string("t");
  r.details["expected"] = g.to_string("t");
  r.details["chirality"] = chirality;
  finish(r, failures, "V(D(3,3,5,-3,-3)) matches all 12 coefficients, " + chirality);
  return r;
}

CheckResult span_law(const ReproduceOptions& o) {
  auto r = result(2, "span-law");
  std::vector<std::string> failures;
  auto rows = nlohmann::json::array();
  for (const auto& p : strict_grid()) {
    const auto jr = jones(generate(p), o.max_states);
    const auto ex = extreme_degrees(p);
    const bool span_ok = jr.span == Rational(p.r + p.t + p.u);
    const bool deg_ok = jr.max_deg == ex.max_deg && jr.min_deg == ex.min_deg;
    if (!span_ok) failures.push_back(p.to_string() + ": span " + to_string(jr.span) + " != r+t+u");
    if (!deg_ok)
      failures.push_back(p.to_string() + ": degrees [" + to_string(jr.min_deg) + ", " + to_string(jr.max_deg) +
                         "] != closed form [" + to_string(ex.min_deg) + ", " + to_string(ex.max_deg) + "]");
    rows.push_back({{"params", p.to_string()},
                    {"span", to_string(jr.span)},
                    {"max_deg", to_string(jr.max_deg)},
                    {"min_deg", to_string(jr.min_deg)},
                    {"closed_max", to_string(ex.max_deg)},
                    {"closed_min", to_string(ex.min_deg)}});
  }
  r.details["grid"] = rows;
  finish(r, failures, "span = r+t+u and both extreme degrees match the closed forms on all 8 tuples");
  return r;
}

CheckResult extreme_coefficients(const ReproduceOptions& o) {
  auto r = result(3, "extreme-coefficients");
  std::vector<std::string> failures;
  for (const auto& p : strict_grid()) {
    const auto jr = jones(generate(p), o.max_states);
    if (abs(jr.a_M) != 2 || abs(jr.a_m) != 2)
      failures.push_back(p.to_string() + ": a_M=" + jr.a_M.str() + " a_m=" + jr.a_m.str());
  }
  finish(r, failures, "|a_M| = |a_m| = 2 on all 8 tuples");
  return r;
}

CheckResult genus(const ReproduceOptions& o) {
  auto r = result(4, "turaev-genus");
  std::vector<std::string> failures;
  for (const auto& p : strict_grid()) {
    const Diagram d = generate(p);
    const auto g = turaev_genus_diagram(d);
    const auto jr = jones(d, o.max_states);
    const auto cert = certify_genus_two(g, jr);
    if (g.g_T_diagram != 2) failures.push_back(p.to_string() + ": g_T(D) = " + std::to_string(g.g_T_diagram));
    if (!cert.certified) failures.push_back(p.to_string() + ": certificate refused (" + cert.reason + ")");
    if (jr.span > Rational(g.c - g.g_T_diagram)) failures.push_back(p.to_string() + ": span > c - g_T");
  }
  finish(r, failures, "g_T(D) = 2, genus-two certificate and span <= c - g_T on all 8 tuples");
  return r;
}

CheckResult defect_law(const ReproduceOptions& o) {
  auto r = result(5, "defect");
  std::vector<std::string> failures;
  for (const auto& p : strict_grid()) {
    const Diagram d = generate(p);
    const auto g = turaev_genus_diagram(d);
    const auto jr = jones(d, o.max_states);
    const Rational delta = defect(d.crossing_count(), g.g_T_diagram, jr.span);
    if (d.crossing_count() != p.crossings()) failures.push_back(p.to_string() + ": crossing count");
    if (delta != Rational(p.s + p.v - 2)) failures.push_back(p.to_string() + ": defect " + to_string(delta));
  }
  finish(r, failures, "c - g_T - span = s + v - 2 on all 8 tuples");
  return r;
}

CheckResult parity(const ReproduceOptions&) {
  auto r = result(6, "component-parity");
  std::vector<std::string> failures;
  for (int q = 0; q < 32; ++q) {
    FamilyParams p{2 + (q >> 4 & 1), 2 + (q >> 3 & 1), 2 + (q >> 2 & 1), 2 + (q >> 1 & 1), 2 + (q & 1)};
    const int got = generate(p).component_count();
    if (got != components_by_parity(p))
      failures.push_back(p.to_string() + ": " + std::to_string(got) + " components, table says " +
                         std::to_string(components_by_parity(p)));
  }
  finish(r, failures, "component counts match the parity table in all 32 classes");
  return r;
}

CheckResult kauffman_axioms(const ReproduceOptions& o) {
  auto r = result(7, "kauffman-axioms");
  std::vector<std::string> failures;
  if (!(kauffman_lambda(Diagram::unknot(), o.skein_nodes) == LaurentPoly2::constant(1)))
    failures.push_back("Lambda(unknot) != 1");
  std::mt19937_64 rng(o.seed);
  int kinks = 0;
  for (int i = 0; i < 20; ++i) {
    const Diagram d = random_connected_diagram(rng, 6);
    const auto base = kauffman_lambda(d, o.skein_nodes);
    for (int sign : {1, -1}) {
      MoveSite s;
      s.move = Move::RI;
      s.arc = static_cast<int>(rng() % static_cast<std::uint64_t>(d.arc_count()));
      s.sign = sign;
      s.over_first = rng() % 2;
      if (!(kauffman_lambda(apply_move(d, s), o.skein_nodes) == base.shifted(sign, 0)))
        failures.push_back("kink of sign " + std::to_string(sign) + " on " + d.to_pd());
      ++kinks;
    }
  }
  const LaurentPoly2 z = LaurentPoly2::monomial(1, 0, 1);
  for (int i = 0; i < 50; ++i) {
    const Diagram d = random_connected_diagram(rng, 8);
    const int x = static_cast<int>(rng() % static_cast<std::uint64_t>(d.crossing_count()));
    // Each of the four diagrams gets its own evaluator.
    const auto plus = kauffman_lambda(d, o.skein_nodes);
    const auto minus = kauffman_lambda(d.switch_crossing(x), o.skein_nodes);
    const auto zero = kauffman_lambda(d.smooth(x, Resolution::A), o.skein_nodes);
    const auto inf = kauffman_lambda(d.smooth(x, Resolution::B), o.skein_nodes);
    LaurentPoly2 lhs = plus;
    lhs += minus;
    LaurentPoly2 rhs = zero;
    rhs += inf;
    rhs *= z;
    if (!(lhs == rhs)) failures.push_back("skein identity fails at crossing " + std::to_string(x) + " of " + d.to_pd());
  }
  r.details["kinks"] = kinks;
  r.details["skein_quadruples"] = 50;
  finish(r, failures, "Lambda(U) = 1, kinks scale by a^(+-1), skein identity on 50 random quadruples");
  return r;
}

CheckResult z_degree_check(const ReproduceOptions& o) {
  auto r = result(8, "kauffman-z-degree");
  std::vector<std::string> failures;
  auto rows = nlohmann::json::array();
  for (const FamilyParams& p : {FamilyParams{2, 2, 2, 2, 2}, FamilyParams{2, 2, 3, 2, 2}}) {
    const int n = p.crossings();
    const int zd = kauffman_lambda(generate(p), o.skein_nodes).z_degree();
    rows.push_back({{"params", p.to_string()}, {"n", n}, {"z_degree", zd}});
    if (zd != n - 2)
      failures.push_back(p.to_string() + ": z-degree " + std::to_string(zd) + ", expected n-2 = " + std::to_string(n - 2));
  }
  r.details["diagrams"] = rows;
  finish(r, failures, "z-degree of Lambda is n-2 for n = 10 and n = 11");
  return r;
}

CheckResult bounds(const ReproduceOptions& o) {
  auto r = result(9, "thistlethwaite-bounds");
  std::vector<std::string> failures;
  std::mt19937_64 rng(o.seed + 9);
  std::vector<Diagram> ds{trefoil(), figure_eight(), generate({2, 2, 2, 2, 2}), generate({2, 2, 3, 2, 2}),
                          connected_sum(trefoil(), figure_eight())};
  for (int i = 0; i < 60; ++i) ds.push_back(random_connected_diagram(rng, 9));
  for (int i = 0; i < 20; ++i) ds.push_back(random_alternating_diagram(rng, 9));
  for (const auto& d : ds) {
    const auto b = thistlethwaite_check(d, kauffman_lambda(d, o.skein_nodes));
    if (!b.ok) failures.push_back("bounds violated on " + d.to_pd());
  }
  // Top z coefficient of a reduced alternating diagram is k (a + 1/a), k > 0.
  for (const auto& [name, d] : {std::pair<std::string, Diagram>{"trefoil", trefoil()}, {"figure-eight", figure_eight()}}) {
    const int n = d.crossing_count();
    const auto lam = kauffman_lambda(d, o.skein_nodes);
    const auto top = lam.z_coefficient(n - 1);
    const Integer k = top.coeff(1);
    const bool ok = lam.z_degree() == n - 1 && top.size() == 2 && k > 0 && top.coeff(-1) == k;
    r.details[name] = top.to_string("a");
    if (!ok) failures.push_back(name + ": z^(n-1) coefficient is " + top.to_string("a"));
  }
  r.details["diagrams"] = ds.size();
  finish(r, failures, "bounds hold on " + std::to_string(ds.size()) + " diagrams; top coefficients k(a + 1/a)");
  return r;
}

CheckResult multiplicativity(const ReproduceOptions& o) {
  auto r = result(10, "multiplicativity");
  std::vector<std::string> failures;
  const auto f = kauffman_f(trefoil(), o.skein_nodes);
  const auto sum = kauffman_f(connected_sum(trefoil(), trefoil()), o.skein_nodes);
  if (!(sum == f * f)) failures.push_back("F(3_1 # 3_1) = " + sum.to_string() + " but F(3_1)^2 = " + (f * f).to_string());
  r.details["f_sum"] = sum.to_string();
  finish(r, failures, "F(trefoil # trefoil) = F(trefoil)^2");
  return r;
}

CheckResult closures(const ReproduceOptions& o) {
  auto r = result(11, "reidemeister-closures");
  std::vector<std::string> failures;
  for (Move m : {Move::RI, Move::RIInverse, Move::RII})
    if (!enumerate_decreasing_closures(m).empty()) failures.push_back(std::string(to_string(m)) + " can lower g_T");
  // RII-inv lowers g_T exactly when some state closes as in (ii).
  for (const auto& c : enumerate_closures(Move::RIIInverse)) {
    const bool lowers = analyze_closure(c).delta_gT < Rational(0);
    const bool has_ii = closure_name(c.a_closure, 4) == "(ii)" || closure_name(c.b_closure, 4) == "(ii)";
    if (lowers != has_ii) failures.push_back("RII-inv " + c.name());
  }
  for (const auto& c : enumerate_closures(Move::RIII)) {
    const auto e = analyze_closure(c);
    const bool lowers = e.delta_gT < Rational(0);
    if (lowers != (closure_name(c.b_closure, 6) == "(iv)")) failures.push_back("RIII " + c.name());
    if (e.delta_sA != 0) failures.push_back("RIII changes the A-state: " + c.name());
  }
  // |s_B| before and after the move for each closure.
  const int expected[5][2] = {{3, 1}, {2, 2}, {2, 2}, {1, 3}, {2, 2}};
  auto table = nlohmann::json::array();
  const auto six = planar_matchings(6);
  for (std::size_t i = 0; i < six.size(); ++i) {
    const int before = closure_circles(Move::RIII, Resolution::B, false, six[i]);
    const int after = closure_circles(Move::RIII, Resolution::B, true, six[i]);
    table.push_back({{"closure", closure_name(six[i], 6)}, {"matching", matching_string(six[i])}, {"sB_before", before}, {"sB_after", after}});
    if (before != expected[i][0] || after != expected[i][1])
      failures.push_back("|s_B| table row " + closure_name(six[i], 6) + ": " + std::to_string(before) + " -> " + std::to_string(after));
  }
  r.details["sB_table"] = table;
  auto dec = nlohmann::json::array();
  for (Move m : all_moves())
    for (const auto& c : enumerate_decreasing_closures(m)) dec.push_back(std::string(to_string(m)) + " " + c.name());
  r.details["decreasing"] = dec;
  // Local predictions against whole-diagram genus changes.
  std::mt19937_64 rng(o.seed + 11);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    const Diagram d = random_connected_diagram(rng, 8);
    for (Move m : all_moves()) {
      const auto sites = move_sites(d, m);
      if (sites.empty()) continue;
      const auto& s = sites[rng() % sites.size()];
      if (auto lc = check_locality(d, s)) {
        ++checked;
        if (!lc->consistent) failures.push_back("local and global g_T change differ at " + s.describe() + " on " + d.to_pd());
      }
    }
  }
  r.details["locality_sites"] = checked;
  finish(r, failures,
         "no decrease for RI, RI-inv, RII; RII-inv needs closure (ii); RIII needs B closure (iv); |s_B| table reproduced; " +
             std::to_string(checked) + " sites agree with the global genus");
  return r;
}

CheckResult invariance(const ReproduceOptions& o) {
  auto r = result(12, "move-invariance");
  std::vector<std::string> failures;
  std::mt19937_64 rng(o.seed + 12);
  nlohmann::json counts = nlohmann::json::object();
  for (Move m : all_moves()) {
    int done = 0, tries = 0;
    while (done < 50 && tries < 5000) {
      ++tries;
      const Diagram d = random_connected_diagram(rng, 10);
      const auto sites = move_sites(d, m);
      if (sites.empty()) continue;
      const auto& s = sites[rng() % sites.size()];
      const Diagram e = apply_move(d, s);
      ++done;
      int shift = 0;
      if (m == Move::RI) shift = s.sign;
      if (m == Move::RIInverse) shift = -d.crossing(s.crossing).sign;
      if (!(jones(e, o.max_states).polynomial == jones(d, o.max_states).polynomial))
        failures.push_back("Jones changed by " + s.describe() + " on " + d.to_pd());
      if (!(kauffman_lambda(e, o.skein_nodes) == kauffman_lambda(d, o.skein_nodes).shifted(shift, 0)))
        failures.push_back("Lambda changed by " + s.describe() + " on " + d.to_pd());
    }
    counts[to_string(m)] = done;
    if (done < 50) failures.push_back(std::string("only ") + std::to_string(done) + " sites for " + to_string(m));
  }
  r.details["sites"] = counts;
  finish(r, failures, "Jones and Lambda behave as expected at 50 random sites per move");
  return r;
}

CheckResult degree_bounds_check(const ReproduceOptions& o) {
  auto r = result(13, "degree-bounds");
  std::vector<std::string> failures;
  std::mt19937_64 rng(o.seed + 13);
  int alternating = 0;
  for (int i = 0; i < 500; ++i) {
    const bool alt = i % 2 == 1;
    const Diagram d = alt ? random_alternating_diagram(rng, 10) : random_connected_diagram(rng, 10);
    if (alt && !is_alternating(d)) failures.push_back("generator produced a non-alternating diagram " + d.to_pd());
    const auto b = degree_bounds(d);
    const auto st = bracket(d, o.max_states).degree_stats();
    // The normalized bracket divides the state sum by one loop value.
    const Rational hi(b.M - 2), lo(b.m + 2);
    if (st.max_degree > hi || st.min_degree < lo) failures.push_back("bounds violated on " + d.to_pd());
    if (alt) {
      ++alternating;
      if (st.max_degree != hi || st.min_degree != lo) failures.push_back("not sharp on alternating " + d.to_pd());
    }
  }
  r.details["diagrams"] = 500;
  r.details["reduced_alternating"] = alternating;
  finish(r, failures, "bracket degrees within [m+2, M-2] on 500 diagrams, equal on the 250 reduced alternating ones");
  return r;
}

}  // namespace

LaurentPoly1 golden_jones() {
  const int coeffs[] = {2, -4, 7, -12, 14, -17, 16, -13, 11, -7, 3, -2};
  LaurentPoly1 v(2);
  int e = 11;
  for (int c : coeffs) {
    v.add_term(e, c);
    e -= 2;
  }
  return v;
}

const std::vector<Check>& reproduction_checks() {
  static const std::vector<Check> checks{
      {1, "golden-jones", "Jones polynomial of D(3,3,5,-3,-3)", golden},
      {2, "span-law", "span and extreme degrees on the strict grid", span_law},
      {3, "extreme-coefficients", "extreme Jones coefficients are +-2", extreme_coefficients},
      {4, "turaev-genus", "Turaev genus two with certificate", genus},
      {5, "defect", "defect s + v - 2", defect_law},
      {6, "component-parity", "component count parity table", parity},
      {7, "kauffman-axioms", "Kauffman polynomial axioms and skein identity", kauffman_axioms},
      {8, "kauffman-z-degree", "z-degree n - 2 on the family", z_degree_check},
      {9, "thistlethwaite-bounds", "Thistlethwaite bounds and alternating top coefficient", bounds},
      {10, "multiplicativity", "F of a connected sum", multiplicativity},
      {11, "reidemeister-closures", "closures that let a move lower the Turaev genus", closures},
      {12, "move-invariance", "invariance under random Reidemeister moves", invariance},
      {13, "degree-bounds", "bracket degree bounds", degree_bounds_check},
  };
  return checks;
}

const Check& find_check(const std::string& key) {
  for (const auto& c : reproduction_checks())
    if (key == c.name || key == std::to_string(c.id)) return c;
  throw std::invalid_argument("unknown check '" + key + "'");
}

nlohmann::json to_json(const CheckResult& r) {
  return {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"summary", r.summary}, {"details", r.details}};
}

}  // namespace turaev
