#pragma once

// Named reproduction checks for the pretzel family results and the
// supporting invariant machinery. Shared by `turaev-lab reproduce` and the
// acceptance binary.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "turaev/bracket.hpp"
#include "turaev/kauffman2.hpp"

namespace turaev {

struct ReproduceOptions {
  int max_states = kDefaultStateBudget;
  std::uint64_t skein_nodes = kDefaultSkeinNodes;
  std::uint64_t seed = 20240607;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string summary;
  nlohmann::json details;
};

struct Check {
  int id;
  std::string name;
  std::string title;
  std::function<CheckResult(const ReproduceOptions&)> run;
};

const std::vector<Check>& reproduction_checks();
/// Looks a check up by number ("1".."13") or name; throws std::invalid_argument.
const Check& find_check(const std::string& key);

/// Reference Jones polynomial of D(3,3,5,-3,-3), doubled exponents 11..-11.
LaurentPoly1 golden_jones();

nlohmann::json to_json(const CheckResult& r);

}  // namespace turaev
