// turaev-lab: command-line front end for the invariant engine.
//
// Exit codes: 0 success, 1 validation error or failed check, 2 budget exhausted.
// Errors go to stderr as one JSON object; stdout carries only the report.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "turaev/bracket.hpp"
#include "turaev/budget.hpp"
#include "turaev/family.hpp"
#include "turaev/jones.hpp"
#include "turaev/kauffman2.hpp"
#include "turaev/reidemeister.hpp"
#include "turaev/reproduce.hpp"
#include "turaev/turaev.hpp"

using nlohmann::json;
using namespace turaev;

namespace {

// A failed reproduction check; reported like a validation error.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
  json failed;
};

struct Options {
  std::string input;
  std::string format = "json";
  std::string orient;
  int budget_states = kDefaultStateBudget;
  std::uint64_t budget_skein = kDefaultSkeinNodes;
  std::string params;
  std::string grid;
  int max_c = 0;
  std::string analyze;
  bool all = false;
  bool decreasing = false;
  std::string sites;
  std::string section;
};

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw std::invalid_argument("--format " + o.format + " is not available here (use " + list + ")");
}

Diagram load(const Options& o) {
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.input);
    if (!in) throw std::invalid_argument("cannot read PD file '" + o.input + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Diagram d = parse_pd(text);
  if (!o.orient.empty()) d = apply_orientation(d, o.orient);
  return d;
}

json degree_json(const DegreeBounds& b) {
  return {{"M", b.M}, {"m", b.m}, {"MJ", to_string(b.MJ)}, {"mJ", to_string(b.mJ)}};
}

int cmd_bracket(const Options& o) {
  require_format(o, {"json", "text"});
  Diagram d = load(o);
  LaurentPoly1 b = bracket(d, o.budget_states);
  if (o.format == "text") {
    std::cout << b.to_string("A") << '\n';
    return 0;
  }
  json j;
  j["crossings"] = d.crossing_count();
  j["components"] = d.component_count();
  j["writhe"] = d.writhe();
  j["bracket"] = b.to_string("A");
  j["terms"] = b.to_json();
  j["sA"] = state_circles(d, all_a_state(d));
  j["sB"] = state_circles(d, all_b_state(d));
  j["adequate"] = {{"A", is_a_adequate(d)}, {"B", is_b_adequate(d)}};
  j["degree_bounds"] = d.is_connected() && d.crossing_count() > 0 ? degree_json(degree_bounds(d)) : json(nullptr);
  print_json(j);
  return 0;
}

json jones_json(const JonesReport& r) {
  return {{"polynomial", r.polynomial.to_string("t")},
          {"terms", r.polynomial.to_json()},
          {"max_deg", to_string(r.max_deg)},
          {"min_deg", to_string(r.min_deg)},
          {"span", to_string(r.span)},
          {"a_M", integer_to_json(r.a_M)},
          {"a_m", integer_to_json(r.a_m)}};
}

int cmd_jones(const Options& o) {
  require_format(o, {"json", "text"});
  Diagram d = load(o);
  JonesReport r = jones(d, o.budget_states);
  if (o.format == "text")
    std::cout << r.polynomial.to_string("t") << '\n';
  else
    print_json(jones_json(r));
  return 0;
}

int cmd_genus(const Options& o) {
  require_format(o, {"json", "text"});
  Diagram d = load(o);
  GenusReport g = turaev_genus_diagram(d);
  GenusCertificate cert = certify_genus_two(g, jones(d, o.budget_states));
  if (cert.certified && !g.certified_link_genus) {
    g.certified_link_genus = cert.genus;
    g.certificate = "genus-two-extreme-coefficients";
  }
  if (o.format == "text") {
    std::cout << "g_T(D) = " << g.g_T_diagram;
    if (g.certified_link_genus) std::cout << ", g_T(L) = " << *g.certified_link_genus << " (" << g.certificate << ")";
    std::cout << '\n';
    return 0;
  }
  json j = to_json(g);
  j["genus_two_certificate"] = {{"certified", cert.certified}, {"reason", cert.reason}};
  print_json(j);
  return 0;
}

int cmd_kauffman2(const Options& o) {
  require_format(o, {"json", "text"});
  Diagram d = load(o);
  KauffmanReport r = kauffman_report(d, o.budget_skein);
  if (o.format == "text")
    std::cout << "Lambda = " << r.lambda.to_string() << "\nF = " << r.f.to_string() << '\n';
  else
    print_json(to_json(r));
  return 0;
}

std::vector<int> parse_ints(const std::string& s, char sep) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size()) throw std::invalid_argument("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

FamilyParams parse_params(const std::string& s) {
  auto v = parse_ints(s, ',');
  if (v.size() != 5) throw std::invalid_argument("--params expects r,s,t,u,v; got '" + s + "'");
  return {v[0], v[1], v[2], v[3], v[4]};
}

// "strict", or ranges such as "r=2..3,s=2..3,t=4..6,u=2,v=2".
std::vector<FamilyParams> parse_grid(const std::string& spec) {
  std::vector<FamilyParams> out;
  if (spec == "strict") {
    for (int r : {2, 3})
      for (int u : {2, 3})
        for (int dt : {2, 3}) out.push_back({r, r, std::max(r, u) + dt, u, u});
    return out;
  }
  const std::string names = "rstuv";
  std::array<std::pair<int, int>, 5> range{};
  std::array<bool, 5> seen{};
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    auto k = eq == 1 ? names.find(item[0]) : std::string::npos;
    if (k == std::string::npos) throw std::invalid_argument("bad grid entry '" + item + "'");
    std::string val = item.substr(2);
    auto dots = val.find("..");
    auto lo = parse_ints(val.substr(0, dots), ',');
    auto hi = dots == std::string::npos ? lo : parse_ints(val.substr(dots + 2), ',');
    if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0]) throw std::invalid_argument("bad grid range '" + item + "'");
    range[k] = {lo[0], hi[0]};
    seen[k] = true;
  }
  for (std::size_t k = 0; k < 5; ++k)
    if (!seen[k]) throw std::invalid_argument(std::string("grid is missing ") + names[k]);
  for (int r = range[0].first; r <= range[0].second; ++r)
    for (int s = range[1].first; s <= range[1].second; ++s)
      for (int t = range[2].first; t <= range[2].second; ++t)
        for (int u = range[3].first; u <= range[3].second; ++u)
          for (int v = range[4].first; v <= range[4].second; ++v) out.push_back({r, s, t, u, v});
  return out;
}

int cmd_family(const Options& o) {
  require_format(o, {"json", "csv"});
  std::vector<FamilyParams> tuples;
  if (!o.params.empty() && !o.grid.empty()) throw std::invalid_argument("give either --params or --grid");
  if (!o.params.empty()) {
    tuples.push_back(parse_params(o.params));
  } else if (!o.grid.empty()) {
    int skipped = 0;
    for (const auto& p : parse_grid(o.grid)) {
      validate(p);
      if (!p.strict()) {
        ++skipped;
        continue;
      }
      if (o.max_c > 0 && p.crossings() > o.max_c) continue;
      tuples.push_back(p);
    }
    if (skipped) std::cerr << json{{"note", "skipped tuples outside r = s, u = v, t >= max(r, u) + 2"}, {"count", skipped}}.dump() << '\n';
  } else {
    throw std::invalid_argument("family needs --params or --grid");
  }
  std::vector<FamilyReport> reports;
  for (const auto& p : tuples) reports.push_back(evaluate_family(p, o.budget_states));
  if (o.format == "csv") {
    std::cout << family_csv_header() << '\n';
    for (const auto& r : reports) std::cout << family_csv_row(r) << '\n';
  } else if (!o.params.empty()) {
    print_json(to_json(reports.front()));
  } else {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    print_json(arr);
  }
  return 0;
}

json effect_json(const TangleClosure& c, const MoveEffect& e) {
  return {{"move", to_string(c.move)},
          {"closure", c.name()},
          {"a_closure", matching_string(c.a_closure)},
          {"b_closure", matching_string(c.b_closure)},
          {"delta_c", e.delta_c},
          {"delta_sA", e.delta_sA},
          {"delta_sB", e.delta_sB},
          {"delta_gT", to_string(e.delta_gT)}};
}

int move_sites_report(const Options& o) {
  require_format(o, {"json"});
  Move m = parse_move(o.sites);
  Diagram d = load(o);
  json arr = json::array();
  for (const auto& site : move_sites(d, m)) {
    json j{{"site", site.describe()}};
    if (auto lc = check_locality(d, site)) {
      j["local"] = effect_json(lc->closure, lc->local);
      j["global_delta_gT"] = lc->global_delta_gT;
      j["consistent"] = lc->consistent;
    }
    arr.push_back(j);
  }
  print_json({{"move", to_string(m)}, {"diagram", d.to_pd()}, {"sites", arr}});
  return 0;
}

int cmd_moves(const Options& o) {
  if (!o.sites.empty()) return move_sites_report(o);
  const std::string format = o.format;
  if (format != "csv" && format != "json") throw std::invalid_argument("--format " + format + " is not available here (use csv, json)");
  std::vector<Move> moves;
  if (o.all)
    moves = all_moves();
  else if (!o.analyze.empty())
    moves.push_back(parse_move(o.analyze));
  else
    throw std::invalid_argument("moves needs --analyze <move>, --all or --sites <move>");
  json arr = json::array();
  if (format == "csv") std::cout << moves_csv_header() << '\n';
  for (Move m : moves) {
    auto closures = o.decreasing ? enumerate_decreasing_closures(m) : enumerate_closures(m);
    for (const auto& c : closures) {
      MoveEffect e = analyze_closure(c);
      if (format == "csv")
        std::cout << moves_csv_row(c, e) << '\n';
      else
        arr.push_back(effect_json(c, e));
    }
  }
  if (format == "json") print_json(arr);
  return 0;
}

int cmd_reproduce(const Options& o) {
  require_format(o, {"json", "text"});
  std::vector<const Check*> checks;
  if (o.all) {
    for (const auto& c : reproduction_checks()) checks.push_back(&c);
  } else if (!o.section.empty()) {
    checks.push_back(&find_check(o.section));
  } else {
    throw std::invalid_argument("reproduce needs --section <name|id> or --all");
  }
  ReproduceOptions ro;
  ro.max_states = o.budget_states;
  ro.skein_nodes = o.budget_skein;
  json arr = json::array();
  json failed = json::array();
  for (const Check* c : checks) {
    CheckResult r = c->run(ro);
    if (!r.pass) failed.push_back(r.name);
    if (o.format == "text")
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << ' ' << r.name << ": " << r.summary << '\n';
    else
      arr.push_back(to_json(r));
  }
  if (o.format == "json") print_json(o.all ? arr : arr.front());
  if (!failed.empty()) {
    CheckFailure f("reproduction checks failed");
    f.failed = failed;
    throw f;
  }
  return 0;
}

int report_error(const char* kind, const std::string& message, int code, json extra = nullptr) {
  json e{{"kind", kind}, {"message", message}};
  if (!extra.is_null()) e["checks"] = extra;
  std::cerr << json{{"error", e}}.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact link invariants from PD codes: bracket, Jones, Turaev genus, Kauffman polynomial"};
  app.require_subcommand(1, 1);
  Options o;

  auto formats = CLI::IsMember({"json", "csv", "text"});
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(formats);
    sub->add_option("--budget-states", o.budget_states, "Largest crossing count for state enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget-skein-nodes", o.budget_skein, "Memo entries allowed in the skein recursion")
        ->check(CLI::PositiveNumber);
  };
  auto add_input = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("pd-file", o.input, "PD code file, or - for stdin");
    if (required) opt->required();
    sub->add_option("--orient", o.orient, "Component orientations, e.g. c1=+,c2=-");
  };

  auto* bracket_cmd = app.add_subcommand("bracket", "Normalized Kauffman bracket");
  add_common(bracket_cmd);
  add_input(bracket_cmd, true);

  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial");
  add_common(jones_cmd);
  add_input(jones_cmd, true);

  auto* genus_cmd = app.add_subcommand("genus", "Turaev genus of the diagram, with the genus-two certificate");
  add_common(genus_cmd);
  add_input(genus_cmd, true);

  auto* kauffman_cmd = app.add_subcommand("kauffman2", "Two-variable Kauffman polynomial");
  add_common(kauffman_cmd);
  add_input(kauffman_cmd, true);
  kauffman_cmd->add_option("--budget", o.budget_skein, "Same as --budget-skein-nodes")->check(CLI::PositiveNumber);

  auto* family_cmd = app.add_subcommand("family", "Pretzel family D(r,s,t,-u,-v) reports");
  add_common(family_cmd);
  family_cmd->add_option("--params", o.params, "r,s,t,u,v");
  family_cmd->add_option("--grid", o.grid, "strict, or r=a..b,s=a..b,t=a..b,u=a..b,v=a..b");
  family_cmd->add_option("--max-c", o.max_c, "Skip tuples with more crossings")->check(CLI::PositiveNumber);

  auto* moves_cmd = app.add_subcommand("moves", "Reidemeister move closure analysis");
  add_common(moves_cmd);
  add_input(moves_cmd, false);
  moves_cmd->add_option("--analyze", o.analyze, "RI, RI-inv, RII, RII-inv, RIII or RIII-mirror");
  moves_cmd->add_flag("--all", o.all, "Every move");
  moves_cmd->add_flag("--decreasing", o.decreasing, "Only closures where the Turaev genus drops");
  moves_cmd->add_option("--sites", o.sites, "List the sites of a move in pd-file with locality checks");

  auto* reproduce_cmd = app.add_subcommand("reproduce", "Named reproduction checks");
  add_common(reproduce_cmd);
  reproduce_cmd->add_option("--section", o.section, "Check name or number");
  reproduce_cmd->add_flag("--all", o.all, "Run every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage", e.what(), 1);
  }

  // moves prints CSV unless asked otherwise.
  if (moves_cmd->parsed() && moves_cmd->count("--format") == 0 && o.sites.empty()) o.format = "csv";

  try {
    if (bracket_cmd->parsed()) return cmd_bracket(o);
    if (jones_cmd->parsed()) return cmd_jones(o);
    if (genus_cmd->parsed()) return cmd_genus(o);
    if (kauffman_cmd->parsed()) return cmd_kauffman2(o);
    if (family_cmd->parsed()) return cmd_family(o);
    if (moves_cmd->parsed()) return cmd_moves(o);
    if (reproduce_cmd->parsed()) return cmd_reproduce(o);
  } catch (const BudgetError& e) {
    return report_error("budget", e.what(), 2);
  } catch (const CheckFailure& e) {
    return report_error("check-failed", e.what(), 1, e.failed);
  } catch (const FamilyCheckError& e) {
    return report_error("check-failed", e.what(), 1);
  } catch (const DiagramError& e) {
    return report_error("diagram", e.what(), 1);
  } catch (const std::invalid_argument& e) {
    return report_error("validation", e.what(), 1);
  } catch (const std::exception& e) {
    return report_error("internal", e.what(), 1);
  }
  return 1;
}
