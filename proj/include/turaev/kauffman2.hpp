#pragma once

// The Kauffman polynomial. Lambda is the unoriented regular-isotopy invariant
// with Lambda(unknot) = 1, Lambda(D+) + Lambda(D-) = z (Lambda(D0) + Lambda(Dinf)),
// and a kink of positive writhe contributing a factor a; F = a^-w Lambda.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "turaev/algebra.hpp"
#include "turaev/budget.hpp"
#include "turaev/diagram.hpp"

namespace turaev {

inline constexpr std::uint64_t kDefaultSkeinNodes = 5'000'000;

/// (a + a^-1) z^-1 - 1, the value of a split circle.
LaurentPoly2 kauffman_delta();

/// Canonical code of a connected diagram, identical for diagrams that agree up
/// to arc relabeling, crossing order and orientation.
std::vector<int> canonical_code(const Diagram& d);

/// Memoized evaluator; the memo persists across calls.
class KauffmanEvaluator {
 public:
  explicit KauffmanEvaluator(std::uint64_t max_nodes = kDefaultSkeinNodes) : max_nodes_(max_nodes) {}

  /// Throws BudgetError once the memo would exceed the node limit.
  LaurentPoly2 lambda(const Diagram& d);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  LaurentPoly2 lambda_connected(const Diagram& d);
  LaurentPoly2 lambda_descending(const Diagram& d);

  std::uint64_t max_nodes_;
  std::map<std::vector<int>, LaurentPoly2> memo_;
};

LaurentPoly2 kauffman_lambda(const Diagram& d, std::uint64_t max_nodes = kDefaultSkeinNodes);
/// a^-w Lambda.
LaurentPoly2 kauffman_f(const Diagram& d, std::uint64_t max_nodes = kDefaultSkeinNodes);
LaurentPoly2 f_from_lambda(const LaurentPoly2& lambda, int writhe);

/// Largest z exponent; throws AlgebraError on zero.
int z_degree(const LaurentPoly2& p);

/// Longest run of consecutive over-passages along any component.
int longest_bridge(const Diagram& d);

/// Splits a connected diagram along circles meeting it in two points.
std::vector<Diagram> connected_sum_factors(const Diagram& d);
/// Longest bridge of each connected-sum factor.
std::vector<int> factor_bridges(const Diagram& d);

struct BoundsCheck {
  bool ok = true;
  int n = 0;
  int bridge_sum = 0;
  std::vector<std::pair<int, int>> violations;  // offending (a, z) exponents
};

/// Every term a^r z^s satisfies |r| + s <= n and s <= n - (sum of factor bridges).
BoundsCheck thistlethwaite_check(const Diagram& d, const LaurentPoly2& lambda);

struct KauffmanReport {
  LaurentPoly2 lambda;
  LaurentPoly2 f;
  int z_degree = 0;
  std::vector<int> longest_bridges;
  BoundsCheck bounds;
};

KauffmanReport kauffman_report(const Diagram& d, std::uint64_t max_nodes = kDefaultSkeinNodes);
nlohmann::json to_json(const KauffmanReport& r);

}  // namespace turaev
