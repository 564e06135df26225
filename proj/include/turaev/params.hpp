#pragma once

#include <algorithm>
#include <string>

namespace turaev {

/// Parameters of the pretzel diagram D(r, s, t, -u, -v); u and v are magnitudes.
struct FamilyParams {
  int r = 2;
  int s = 2;
  int t = 2;
  int u = 2;
  int v = 2;

  int crossings() const { return r + s + t + u + v; }
  /// r = s, u = v and t >= max(r, u) + 2.
  bool strict() const { return r == s && u == v && t >= std::max(r, u) + 2; }
  std::string to_string() const {
    return std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + "," +
           std::to_string(u) + "," + std::to_string(v);
  }
  bool operator==(const FamilyParams&) const = default;
};

}  // namespace turaev
