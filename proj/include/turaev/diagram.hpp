#pragma once

// Planar diagram (PD) codes of oriented link diagrams.
//
// Each crossing lists its four incident arcs counterclockwise, starting at the
// incoming under-strand: slots 0 -> 2 carry the under-strand, slots 1 and 3 the
// over-strand. A crossing is positive when the over-strand enters at slot 3.
// Arcs are renumbered 0..2c-1 consecutively along each oriented component;
// free loops (crossingless circles) are counted separately.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace turaev {

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Resolution { A, B };

struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 0;     // +1 or -1
  int region = -1;  // twist-region tag, -1 when untagged
};

/// A crossing with no orientation data: arcs counterclockwise, under-strand on slots 0 and 2.
struct RawCrossing {
  std::array<int, 4> arcs{};
  int region = -1;
  // Slot (1 or 3) where the over-strand enters, when an orientation is known.
  // Used as a preference when choosing component directions.
  int over_in = -1;
};

/// One end of an arc: the crossing it attaches to and the slot there.
struct Slot {
  int crossing = -1;
  int slot = -1;
  bool operator==(const Slot&) const = default;
  auto operator<=>(const Slot&) const = default;
};

/// Passage of an oriented component through a crossing, entering at `in_slot`.
struct Passage {
  int crossing;
  int in_slot;
  bool is_under() const { return in_slot % 2 == 0; }
};

class Diagram {
 public:
  /// The empty diagram (no crossings, no loops).
  Diagram() = default;

  /// 0-crossing diagram of the unknot.
  static Diagram unknot() { return unlink(1); }
  /// 0-crossing diagram of the k-component unlink.
  static Diagram unlink(int k);

  /// PD input where slot 0 must be the incoming under-strand. Orientation is
  /// inferred from the under-strands; components that never pass under are
  /// oriented by increasing arc label. Throws DiagramError when some arc does
  /// not occur exactly twice, the code is not planar, or no orientation is
  /// consistent with the slot-0 convention.
  static Diagram from_pd(const std::vector<std::array<int, 4>>& crossings, int free_loops = 0,
                         const std::vector<int>& regions = {});

  /// Unoriented input: under-strand on slots {0,2}, otherwise arbitrary. The
  /// label pairs in `joins` are first identified (they lie on one strand);
  /// identified classes with no remaining slot become free loops. An
  /// orientation is chosen per component.
  static Diagram from_raw(const std::vector<RawCrossing>& crossings, int free_loops = 0,
                          const std::vector<std::pair<int, int>>& joins = {});

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int free_loops() const { return free_loops_; }
  int arc_count() const { return 2 * crossing_count(); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int i) const { return crossings_.at(static_cast<std::size_t>(i)); }

  int writhe() const;
  /// Link components, free loops included.
  int component_count() const { return static_cast<int>(passages_.size()) + free_loops_; }
  /// Components that carry crossings, each as its passages in orientation order.
  const std::vector<std::vector<Passage>>& passages() const { return passages_; }
  /// Component index of an arc.
  int arc_component(int arc) const { return arc_component_.at(static_cast<std::size_t>(arc)); }
  /// Where an arc leaves (tail) and enters (head) a crossing.
  Slot arc_tail(int arc) const { return tails_.at(static_cast<std::size_t>(arc)); }
  Slot arc_head(int arc) const { return heads_.at(static_cast<std::size_t>(arc)); }
  /// The other end of the arc sitting at `s`.
  Slot mate(Slot s) const;

  /// True when the projection is connected; a lone free loop counts as connected.
  bool is_connected() const;
  /// Number of connected pieces of the projection, free loops included.
  int piece_count() const;

  /// Faces of the projection as cyclic sequences of darts. A dart (c, s)
  /// leaves crossing c through slot s; the face lies to the left.
  std::vector<std::vector<Slot>> faces() const;

  /// Unoriented copy of the crossings (under-strand on slots 0 and 2).
  std::vector<RawCrossing> raw() const;
  /// Same, with each crossing's over-strand entry recorded as a hint.
  std::vector<RawCrossing> oriented_raw() const;

  Diagram smooth(int crossing_index, Resolution r) const;
  Diagram switch_crossing(int crossing_index) const;
  Diagram mirror() const;
  /// Reverses the listed components (0-based, in passages() order).
  Diagram reverse_components(const std::vector<int>& components) const;
  Diagram with_regions(const std::vector<int>& regions) const;
  Diagram with_free_loops(int k) const;
  /// Deletes the listed crossings, joining the through-strands at each.
  Diagram remove_crossings(const std::vector<int>& indices) const;
  /// Connected pieces of the projection; each free loop is its own piece.
  std::vector<Diagram> pieces() const;

  /// "X[1,2,3,4] X[...] O[k]" with 1-based arc labels.
  std::string to_pd() const;

  bool operator==(const Diagram& o) const {
    return crossings_ == o.crossings_ && free_loops_ == o.free_loops_;
  }

 private:
  enum class Mode { Strict, Relaxed };
  static Diagram build(std::vector<RawCrossing> crossings, int free_loops,
                       const std::vector<std::pair<int, int>>& joins, Mode mode,
                       const std::vector<int>& reverse = {});

  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::vector<std::vector<Passage>> passages_;
  std::vector<int> arc_component_;
  std::vector<Slot> tails_;
  std::vector<Slot> heads_;
};

bool operator==(const Crossing& a, const Crossing& b);

/// Parses whitespace-separated `X[i,j,k,l]` and `O[m]` tokens with an optional
/// `orient: c1=+,c2=-` header. Lines starting with '#' are ignored.
Diagram parse_pd(std::string_view text);

/// Applies an orientation spec such as "c1=+,c2=-" (1-based components; '-' reverses).
Diagram apply_orientation(const Diagram& d, std::string_view spec);

/// Joins two diagrams along one arc of each, respecting orientation.
Diagram connected_sum(const Diagram& d1, const Diagram& d2);

/// Disjoint union (split placement) of two diagrams.
Diagram disjoint_union(const Diagram& d1, const Diagram& d2);

/// Closure of a braid word on `strands` strands; generator +i crosses
/// strands i and i+1 positively. Unused strands become free loops.
Diagram braid_closure(int strands, const std::vector<int>& word);

}  // namespace turaev
