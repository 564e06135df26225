#include "turaev/turaev.hpp"

namespace turaev {

bool is_alternating(const Diagram& d) {
  for (const auto& comp : d.passages()) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const auto& next = comp[(i + 1) % comp.size()];
      if (comp[i].is_under() == next.is_under()) return false;
    }
  }
  return true;
}

GenusReport turaev_genus_diagram(const Diagram& d) {
  if (!d.is_connected()) throw DiagramError("Turaev genus needs a connected diagram; this one is split");
  GenusReport g;
  g.c = d.crossing_count();
  g.sA = state_circles(d, all_a_state(d));
  g.sB = state_circles(d, all_b_state(d));
  const int twice = g.c + 2 - g.sA - g.sB;
  if (twice < 0 || twice % 2 != 0)
    throw DiagramError("c + 2 - |sA| - |sB| = " + std::to_string(twice) + " is not a nonnegative even number");
  g.g_T_diagram = twice / 2;
  if (is_alternating(d)) {
    g.certified_link_genus = 0;
    g.certificate = "alternating";
  }
  return g;
}

GenusCertificate certify_genus_two(const GenusReport& g, const JonesReport& jr) {
  GenusCertificate out;
  if (g.g_T_diagram != 2) {
    out.reason = "diagram genus is " + std::to_string(g.g_T_diagram) + ", certificate inapplicable";
    return out;
  }
  if (abs(jr.a_M) == 1 || abs(jr.a_m) == 1) {
    out.reason = "extreme coefficient is a unit";
    return out;
  }
  out.certified = true;
  out.genus = 2;
  out.reason = "diagram genus 2 gives g_T <= 2; non-unit extreme coefficients give g_T >= 2";
  return out;
}

GenusCertificate certify_genus_two(const Diagram& d, const JonesReport& jr) {
  return certify_genus_two(turaev_genus_diagram(d), jr);
}

nlohmann::json to_json(const GenusReport& g) {
  nlohmann::json j;
  j["c"] = g.c;
  j["sA"] = g.sA;
  j["sB"] = g.sB;
  j["g_T_diagram"] = g.g_T_diagram;
  if (g.certified_link_genus) {
    j["certified_link_genus"] = *g.certified_link_genus;
    j["certificate"] = g.certificate;
  } else {
    j["certified_link_genus"] = nullptr;
    j["link_genus_upper_bound"] = g.g_T_diagram;
  }
  return j;
}

}  // namespace turaev
