#pragma once

// Kauffman states, state circles and the bracket polynomial.
//
// The bracket is normalized so that the crossingless unknot has bracket 1:
// each state contributes A^sgn * d^(circles - 1), d = -A^2 - A^-2.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "turaev/algebra.hpp"
#include "turaev/budget.hpp"
#include "turaev/diagram.hpp"

namespace turaev {

inline constexpr int kDefaultStateBudget = 24;

/// Resolution per crossing, indexed like Diagram::crossings().
using KauffmanState = std::vector<Resolution>;

KauffmanState all_a_state(const Diagram& d);
KauffmanState all_b_state(const Diagram& d);
/// (#A choices) - (#B choices).
int state_sign(const KauffmanState& s);

/// Number of circles after smoothing every crossing as `s` says, free loops included.
int state_circles(const Diagram& d, const KauffmanState& s);

/// d^k for the loop value d = -A^2 - A^-2.
LaurentPoly1 loop_value_power(int k);

/// Exact normalized bracket. Throws BudgetError above `max_crossings`.
LaurentPoly1 bracket(const Diagram& d, int max_crossings = kDefaultStateBudget);

struct StateGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // one per crossing, in crossing order
  int loop_edges() const;
};

StateGraph state_graph(const Diagram& d, const KauffmanState& s);
bool is_a_adequate(const Diagram& d);
bool is_b_adequate(const Diagram& d);
bool is_adequate(const Diagram& d);

/// Diagrammatic degree bounds. M and m use the unnormalized state-sum convention
/// (M = c + 2|sA|, m = -c - 2|sB|); the normalized bracket lies in [m + 2, M - 2].
/// MJ and mJ bound the Jones polynomial in t.
struct DegreeBounds {
  int M = 0;
  int m = 0;
  Rational MJ;
  Rational mJ;
};

/// Throws DiagramError on split diagrams.
DegreeBounds degree_bounds(const Diagram& d);

/// State groups for diagrams annotated with twist regions 0..4 = r, s, t, u, v.
/// A state's count in a region is the number of B choices there.
enum class StateGroup {
  S1,        // t all A, u not all B, v not all B
  S2,        // t all A, u all B, v not all B
  S3,        // t all A, v all B
  S4,        // some B in t
  SBar1,     // u + v not all B
  SBar2,     // u, v all B, r all B, s not all B
  SBar3,     // u, v all B, s all B
  SBarRest,  // u, v all B, r not all B, s not all B
};

const char* to_string(StateGroup g);

/// Partial state sum over one group, in the unnormalized convention where a
/// state contributes A^sgn * d^circles (so deg of a state is sgn + 2 circles).
struct GroupSum {
  LaurentPoly1 sum;
  std::uint64_t states = 0;
  /// Degree range of the partial sum; empty when the sum vanishes.
  std::optional<DegreeStats> degrees;
};

/// Per-region B counts of a state, indexed r, s, t, u, v.
using RegionCounts = std::array<int, 5>;

/// Partial sum over the states accepted by `keep`. Throws DiagramError when
/// some crossing has no region tag.
GroupSum partial_state_sum(const Diagram& d, const std::function<bool(const RegionCounts&)>& keep,
                           int max_crossings = kDefaultStateBudget);

/// Throws DiagramError when some crossing has no region tag.
GroupSum grouped_state_sum(const Diagram& d, StateGroup g, int max_crossings = kDefaultStateBudget);

}  // namespace turaev
