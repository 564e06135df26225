#pragma once

// Turaev genus of a diagram, g_T(D) = (c + 2 - |sA| - |sB|) / 2, and the
// genus-two certificate from the extreme Jones coefficients.

#include <optional>
#include <string>

#include <json.hpp>

#include "turaev/diagram.hpp"
#include "turaev/jones.hpp"

namespace turaev {

struct GenusReport {
  int c = 0;
  int sA = 0;
  int sB = 0;
  int g_T_diagram = 0;
  /// Set only when the link genus is pinned down (certificate or alternating diagram).
  std::optional<int> certified_link_genus;
  std::string certificate;  // "genus-two-extreme-coefficients", "alternating", or empty
};

/// Every component alternates over and under (free loops are ignored).
bool is_alternating(const Diagram& d);

/// Throws DiagramError on split diagrams.
GenusReport turaev_genus_diagram(const Diagram& d);

struct GenusCertificate {
  bool certified = false;
  int genus = -1;      // 2 when certified
  std::string reason;  // why the certificate applies or is refused
};

/// Genus is at most 2 from the diagram and at least 2 when neither extreme
/// Jones coefficient is a unit.
GenusCertificate certify_genus_two(const Diagram& d, const JonesReport& jr);
GenusCertificate certify_genus_two(const GenusReport& g, const JonesReport& jr);

nlohmann::json to_json(const GenusReport& g);

}  // namespace turaev
