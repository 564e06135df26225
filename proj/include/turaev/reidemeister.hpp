#pragma once

// Reidemeister moves on PD diagrams, and the local analysis of how a move
// changes the all-A and all-B state circle counts.
//
// Tangle endpoints are labelled a, b, c, ... (0, 1, 2, ...). For four points
// a = NW, b = NE, c = SW, d = SE; six points a..f run around the disk.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turaev/algebra.hpp"
#include "turaev/diagram.hpp"

namespace turaev {

class MoveError : public DiagramError {
 public:
  using DiagramError::DiagramError;
};

enum class Move { RI, RIInverse, RII, RIIInverse, RIII, RIIIMirror };

const char* to_string(Move m);
/// Accepts "RI", "RI-inv", "RII", "RII-inv", "RIII", "RIII-mirror".
Move parse_move(const std::string& s);
const std::vector<Move>& all_moves();

/// Where to apply a move. Unused fields stay at their defaults.
struct MoveSite {
  Move move = Move::RI;
  int arc = -1;             // RI: arc that receives the kink
  int sign = 1;             // RI: writhe of the new crossing
  bool over_first = false;  // RI: the strand enters the kink on top
  int crossing = -1;        // RI-inv: the kink crossing
  int face = -1;            // RII, RII-inv, RIII: index into faces()
  int dart1 = -1;           // RII: positions of the two edges on the face
  int dart2 = -1;
  bool first_over = true;   // RII: the edge at dart1 is pushed over the other
  std::string describe() const;
};

/// Every site where the move applies. RIII sites are triangles with a strand
/// above both others, whatever their handedness.
std::vector<MoveSite> move_sites(const Diagram& d, Move m);

/// Applies the move, keeping every component's orientation. New crossings are
/// appended after the untouched ones. Throws MoveError when the pattern is absent.
Diagram apply_move(const Diagram& d, const MoveSite& site);

using Matching = std::vector<std::pair<int, int>>;

/// Non-crossing perfect matchings of 2k points on a circle, in the order
/// (i), (ii), ... used by the closure tables.
std::vector<Matching> planar_matchings(int points);
/// "(i)", "(ii)", ...; throws when the matching is not planar.
std::string closure_name(const Matching& m, int points);
std::string matching_string(const Matching& m);

/// How the rest of the diagram joins the tangle endpoints in its all-A and all-B states.
struct TangleClosure {
  Move move = Move::RI;
  Matching a_closure;
  Matching b_closure;
  std::string name() const;
};

struct MoveEffect {
  int delta_c = 0;
  int delta_sA = 0;
  int delta_sB = 0;
  Rational delta_gT{0};
};

int endpoint_count(Move m);

/// Builds the tangle before and after the move, closes it with the given
/// matchings and counts state circles.
MoveEffect analyze_closure(const TangleClosure& closure);
/// State circles of the tangle before or after the move, closed by `closure`.
int closure_circles(Move m, Resolution r, bool after, const Matching& closure);
/// Inner matching of the all-A or all-B smoothing before/after the move, for reports.
Matching inner_matching(Move m, Resolution r, bool after);

std::vector<TangleClosure> enumerate_closures(Move m);
std::vector<TangleClosure> enumerate_decreasing_closures(Move m);

std::string moves_csv_header();
std::string moves_csv_row(const TangleClosure& c, const MoveEffect& e);

/// Reads off the closure that the diagram induces at a move site and compares
/// the local prediction with the Turaev genus change of the whole diagram.
struct LocalityCheck {
  TangleClosure closure;
  MoveEffect local;
  int global_delta_gT = 0;
  bool consistent = false;
};
/// Empty when either diagram is split (the genus formula needs a connected projection).
std::optional<LocalityCheck> check_locality(const Diagram& d, const MoveSite& site);

}  // namespace turaev
