#pragma once

// Pretzel diagrams D(r, s, t, -u, -v): five vertical twist regions, left to
// right +r, +s, +t, -u, -v, with crossings tagged by region (0..4).

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "turaev/diagram.hpp"
#include "turaev/jones.hpp"
#include "turaev/params.hpp"
#include "turaev/turaev.hpp"

namespace turaev {

/// A computed family value disagrees with its closed form.
class FamilyCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument unless every parameter is at least 2.
void validate(const FamilyParams& p);

/// t + u - r - s - v, which is t - 2r in the strict regime.
int target_writhe(const FamilyParams& p);

/// The frozen realization, oriented so that the writhe is as close as
/// possible to target_writhe(p). In the strict regime with r = u mod 2 the
/// target is reached and a miss throws FamilyCheckError.
Diagram generate(const FamilyParams& p);

/// The realization under every orientation that keeps component 0 fixed.
std::vector<Diagram> family_orientations(const FamilyParams& p);

/// Component count from the parities of r, s, t, u, v.
int components_by_parity(const FamilyParams& p);

struct FamilyReport {
  FamilyParams params;
  int c = 0;
  int writhe = 0;
  Rational span;
  int gT = 0;
  Rational delta;
  int components = 0;
  JonesReport jones;
  GenusReport genus;
  GenusCertificate certificate;
  std::vector<std::string> failed_checks;  // closed forms the computation disagrees with
};

/// Strict-regime report with every closed form cross-checked; mismatches are
/// listed in failed_checks.
FamilyReport evaluate_family(const FamilyParams& p, int max_crossings = kDefaultStateBudget);

/// As evaluate_family, but any mismatch throws FamilyCheckError.
FamilyReport family_report(const FamilyParams& p, int max_crossings = kDefaultStateBudget);

nlohmann::json to_json(const FamilyReport& r);
std::string family_csv_header();
std::string family_csv_row(const FamilyReport& r);

}  // namespace turaev
