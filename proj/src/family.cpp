#include "turaev/family.hpp"

#include <array>
#include <map>
#include <optional>

namespace turaev {

namespace {

// Each region is a vertical chain of crossings. A crossing's corners are
// NW, SW, SE, NE (counterclockwise); SW and SE of one crossing meet NW and NE
// of the one below. Region ends are numbered 4 * region + corner, where the
// corner is that of the top crossing (NW, NE) or the bottom one (SW, SE).
// These joins close the five regions into the diagram; they give the
// component counts of the parity table.
constexpr std::array<std::pair<int, int>, 10> kClosure{{
    {0, 5}, {1, 4}, {2, 9}, {3, 16}, {6, 19}, {7, 12}, {8, 17}, {10, 15}, {11, 14}, {13, 18},
}};

constexpr int kNW = 0, kSW = 1, kSE = 2, kNE = 3;

Diagram build_unoriented(const FamilyParams& p) {
  const std::array<int, 5> counts{p.r, p.s, p.t, p.u, p.v};
  std::vector<std::array<int, 4>> corners;
  std::vector<int> region;
  std::map<int, int> mate;
  std::array<int, 20> ends{};
  int next = 0;
  for (int k = 0; k < 5; ++k) {
    for (int i = 0; i < counts[static_cast<std::size_t>(k)]; ++i) {
      std::array<int, 4> h{next, next + 1, next + 2, next + 3};
      next += 4;
      if (i == 0) {
        ends[static_cast<std::size_t>(4 * k + kNW)] = h[kNW];
        ends[static_cast<std::size_t>(4 * k + kNE)] = h[kNE];
      } else {
        const auto& up = corners.back();
        mate[up[kSW]] = h[kNW];
        mate[h[kNW]] = up[kSW];
        mate[up[kSE]] = h[kNE];
        mate[h[kNE]] = up[kSE];
      }
      corners.push_back(h);
      region.push_back(k);
    }
    ends[static_cast<std::size_t>(4 * k + kSW)] = corners.back()[kSW];
    ends[static_cast<std::size_t>(4 * k + kSE)] = corners.back()[kSE];
  }
  for (auto [a, b] : kClosure) {
    int x = ends[static_cast<std::size_t>(a)], y = ends[static_cast<std::size_t>(b)];
    mate[x] = y;
    mate[y] = x;
  }
  auto arc = [&](int corner) { return std::min(corner, mate.at(corner)); };
  std::vector<RawCrossing> raw;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    const auto& h = corners[i];
    RawCrossing x;
    x.region = region[i];
    // Positive regions put the NE-SW strand on top, negative regions NW-SE.
    if (region[i] < 3)
      x.arcs = {arc(h[kNW]), arc(h[kSW]), arc(h[kSE]), arc(h[kNE])};
    else
      x.arcs = {arc(h[kSW]), arc(h[kSE]), arc(h[kNE]), arc(h[kNW])};
    raw.push_back(x);
  }
  return Diagram::from_raw(raw);
}

}  // namespace

void validate(const FamilyParams& p) {
  for (int x : {p.r, p.s, p.t, p.u, p.v})
    if (x < 2) throw std::invalid_argument("family parameters must all be at least 2; got " + p.to_string());
}

std::vector<Diagram> family_orientations(const FamilyParams& p) {
  validate(p);
  Diagram d = build_unoriented(p);
  const int k = static_cast<int>(d.passages().size());
  std::vector<Diagram> out;
  for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
    std::vector<int> rev;
    for (int i = 1; i < k; ++i)
      if (mask >> (i - 1) & 1) rev.push_back(i);
    out.push_back(d.reverse_components(rev));
  }
  return out;
}

int target_writhe(const FamilyParams& p) { return p.t + p.u - p.r - p.s - p.v; }

Diagram generate(const FamilyParams& p) {
  const int target = target_writhe(p);
  std::optional<Diagram> best;
  for (auto& e : family_orientations(p))
    if (!best || std::abs(e.writhe() - target) < std::abs(best->writhe() - target)) best = std::move(e);
  // When r and u have different parities no orientation reaches the target;
  // see family_report's writhe check.
  if (p.strict() && (p.r - p.u) % 2 == 0 && best->writhe() != target)
    throw FamilyCheckError("no orientation of D(" + p.to_string() + ") has writhe " + std::to_string(target));
  return *best;
}

int components_by_parity(const FamilyParams& p) {
  // Indexed by the parities of r, s, t, u, v read as a binary number.
  static constexpr std::array<int, 32> table{
      4, 3, 3, 2, 3, 2, 2, 2, 3, 2, 2, 1, 2, 1, 1, 1,
      3, 2, 2, 1, 2, 1, 1, 1, 2, 2, 1, 1, 1, 1, 2, 2,
  };
  int idx = (p.r % 2) << 4 | (p.s % 2) << 3 | (p.t % 2) << 2 | (p.u % 2) << 1 | (p.v % 2);
  return table[static_cast<std::size_t>(idx)];
}

FamilyReport evaluate_family(const FamilyParams& p, int max_crossings) {
  validate(p);
  if (!p.strict()) throw std::invalid_argument("family reports need r = s, u = v and t >= max(r, u) + 2; got " + p.to_string());
  FamilyReport r;
  r.params = p;
  Diagram d = generate(p);
  r.c = d.crossing_count();
  r.writhe = d.writhe();
  r.components = d.component_count();
  r.jones = jones(d, max_crossings);
  r.span = r.jones.span;
  r.genus = turaev_genus_diagram(d);
  r.certificate = certify_genus_two(r.genus, r.jones);
  r.gT = r.genus.g_T_diagram;
  r.delta = defect(r.c, r.gT, r.span);

  auto check = [&](bool ok, const std::string& what) {
    if (!ok) r.failed_checks.push_back(what);
  };
  const auto ex = extreme_degrees(p);
  check(r.c == p.crossings(), "crossing count is not r+s+t+u+v");
  check(r.components == components_by_parity(p), "component count disagrees with the parity table");
  check(r.writhe == target_writhe(p), "writhe is not t-2r");
  check(r.jones.max_deg == ex.max_deg && r.jones.min_deg == ex.min_deg, "Jones degrees differ from the closed forms");
  check(r.span == Rational(p.r + p.t + p.u), "span is not r+t+u");
  check(abs(r.jones.a_M) == 2 && abs(r.jones.a_m) == 2, "extreme Jones coefficients are not +-2");
  check(r.certificate.certified, "genus-two certificate refused: " + r.certificate.reason);
  check(r.span <= Rational(r.c - r.gT), "span exceeds c - g_T");
  check(r.delta == Rational(p.s + p.v - 2), "defect is not s+v-2");
  if (r.certificate.certified) {
    r.genus.certified_link_genus = 2;
    r.genus.certificate = "genus-two-extreme-coefficients";
  }
  return r;
}

FamilyReport family_report(const FamilyParams& p, int max_crossings) {
  FamilyReport r = evaluate_family(p, max_crossings);
  if (!r.failed_checks.empty()) {
    std::string msg = "D(" + p.to_string() + "):";
    for (const auto& f : r.failed_checks) msg += " " + f + ";";
    throw FamilyCheckError(msg);
  }
  return r;
}

nlohmann::json to_json(const FamilyReport& r) {
  nlohmann::json j;
  j["params"] = {{"r", r.params.r}, {"s", r.params.s}, {"t", r.params.t}, {"u", r.params.u}, {"v", r.params.v}};
  j["c"] = r.c;
  j["span"] = to_string(r.span);
  j["gT"] = r.gT;
  j["delta"] = to_string(r.delta);
  j["components"] = r.components;
  j["jones"] = {{"polynomial", r.jones.polynomial.to_string("t")},
                {"max_deg", to_string(r.jones.max_deg)},
                {"min_deg", to_string(r.jones.min_deg)},
                {"a_M", integer_to_json(r.jones.a_M)},
                {"a_m", integer_to_json(r.jones.a_m)}};
  j["genus"] = to_json(r.genus);
  j["writhe"] = r.writhe;
  j["checks"] = r.failed_checks.empty() ? nlohmann::json("ok") : nlohmann::json(r.failed_checks);
  j["crossing_number"] = {{"value", r.c}, {"basis", "theorem-backed; not machine-proved"}};
  return j;
}

std::string family_csv_header() { return "r,s,t,u,v,r_par,s_par,t_par,u_par,v_par,components,c,writhe,span,gT,delta,a_M,a_m,checks"; }

std::string family_csv_row(const FamilyReport& r) {
  const auto& p = r.params;
  std::string out;
  for (int x : {p.r, p.s, p.t, p.u, p.v}) out += std::to_string(x) + ",";
  for (int x : {p.r, p.s, p.t, p.u, p.v}) out += std::to_string(x % 2) + ",";
  out += std::to_string(r.components) + "," + std::to_string(r.c) + "," + std::to_string(r.writhe) + "," + to_string(r.span) + "," + std::to_string(r.gT) +
         "," + to_string(r.delta) + "," + r.jones.a_M.str() + "," + r.jones.a_m.str() + ",";
  if (r.failed_checks.empty()) {
    out += "ok";
  } else {
    std::string joined;
    for (const auto& f : r.failed_checks) joined += (joined.empty() ? "" : "; ") + f;
    out += "\"" + joined + "\"";
  }
  return out;
}

}  // namespace turaev
