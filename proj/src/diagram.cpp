#include "turaev/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace turaev {

bool operator==(const Crossing& a, const Crossing& b) {
  return a.arcs == b.arcs && a.sign == b.sign && a.region == b.region;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
};

int mod4(int x) { return ((x % 4) + 4) % 4; }

}  // namespace

Diagram Diagram::unlink(int k) {
  if (k < 0) throw DiagramError("negative loop count");
  Diagram d;
  d.free_loops_ = k;
  return d;
}

Diagram Diagram::from_pd(const std::vector<std::array<int, 4>>& crossings, int free_loops,
                         const std::vector<int>& regions) {
  if (!regions.empty() && regions.size() != crossings.size())
    throw DiagramError("region annotation length does not match crossing count");
  std::vector<RawCrossing> raw;
  raw.reserve(crossings.size());
  for (std::size_t i = 0; i < crossings.size(); ++i)
    raw.push_back(RawCrossing{crossings[i], regions.empty() ? -1 : regions[i], -1});
  return build(std::move(raw), free_loops, {}, Mode::Strict);
}

Diagram Diagram::from_raw(const std::vector<RawCrossing>& crossings, int free_loops,
                          const std::vector<std::pair<int, int>>& joins) {
  return build(crossings, free_loops, joins, Mode::Relaxed);
}

Diagram Diagram::build(std::vector<RawCrossing> xs, int free_loops,
                       const std::vector<std::pair<int, int>>& joins, Mode mode,
                       const std::vector<int>& reverse) {
  if (free_loops < 0) throw DiagramError("negative free loop count");
  const int n = static_cast<int>(xs.size());

  // Identify labels, then collapse joined labels into classes.
  std::map<int, int> index;
  auto idx = [&](int label) {
    auto [it, inserted] = index.try_emplace(label, static_cast<int>(index.size()));
    return it->second;
  };
  for (const auto& x : xs)
    for (int a : x.arcs) idx(a);
  for (const auto& [a, b] : joins) {
    idx(a);
    idx(b);
  }
  UnionFind uf(index.size());
  for (const auto& [a, b] : joins) uf.unite(index.at(a), index.at(b));

  std::vector<std::array<int, 4>> cls(static_cast<std::size_t>(n));
  std::vector<std::vector<Slot>> occ(index.size());
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      int k = uf.find(index.at(xs[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>(s)]));
      cls[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] = k;
      occ[static_cast<std::size_t>(k)].push_back({c, s});
    }
  std::map<int, int> label_of_index;
  for (const auto& [label, i] : index) label_of_index.emplace(i, label);
  int loops = free_loops;
  for (std::size_t k = 0; k < occ.size(); ++k) {
    if (uf.find(static_cast<int>(k)) != static_cast<int>(k)) continue;
    if (occ[k].empty()) {
      ++loops;
    } else if (occ[k].size() != 2) {
      throw DiagramError("arc label " + std::to_string(label_of_index.at(static_cast<int>(k))) +
                         " appears " + std::to_string(occ[k].size()) + " times; expected exactly 2");
    }
  }

  auto other_end = [&](Slot s) {
    const auto& o = occ[static_cast<std::size_t>(cls[static_cast<std::size_t>(s.crossing)][static_cast<std::size_t>(s.slot)])];
    return o[0] == s ? o[1] : o[0];
  };

  // Trace components as cyclic passage sequences.
  std::vector<std::array<int, 2>> strand_comp(static_cast<std::size_t>(n), {-1, -1});
  std::vector<std::vector<Passage>> comps;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 2; ++s) {
      if (strand_comp[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] >= 0) continue;
      std::vector<Passage> seq;
      Slot cur{c, s};
      do {
        seq.push_back({cur.crossing, cur.slot});
        strand_comp[static_cast<std::size_t>(cur.crossing)][static_cast<std::size_t>(cur.slot % 2)] =
            static_cast<int>(comps.size());
        cur = other_end({cur.crossing, mod4(cur.slot + 2)});
      } while (!(cur == Slot{c, s}));
      comps.push_back(std::move(seq));
    }

  // Pick a direction per component.
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    auto& seq = comps[ci];
    int under_fwd = 0, under_rev = 0, hint_fwd = 0, hint_rev = 0;
    for (const auto& p : seq) {
      const auto& x = xs[static_cast<std::size_t>(p.crossing)];
      if (p.in_slot % 2 == 0) {
        (p.in_slot == 0 ? under_fwd : under_rev)++;
      } else if (x.over_in >= 0) {
        (p.in_slot == x.over_in ? hint_fwd : hint_rev)++;
      }
    }
    bool forward;
    if (under_fwd + under_rev > 0 && (under_fwd == 0 || under_rev == 0)) {
      forward = under_fwd > 0;
    } else if (under_fwd > 0 && under_rev > 0) {
      if (mode == Mode::Strict)
        throw DiagramError("no orientation is consistent with the incoming-under slot convention");
      forward = under_fwd + hint_fwd >= under_rev + hint_rev;
    } else if (hint_fwd != hint_rev) {
      forward = hint_fwd > hint_rev;
    } else {
      // Only over-passages: follow increasing labels from the smallest one.
      std::size_t m = seq.size();
      std::size_t best = 0;
      int best_label = 0;
      for (std::size_t j = 0; j < m; ++j) {
        const auto& p = seq[j];
        int lab = xs[static_cast<std::size_t>(p.crossing)].arcs[static_cast<std::size_t>(p.in_slot)];
        if (j == 0 || lab < best_label) {
          best_label = lab;
          best = j;
        }
      }
      // Arc entering seq[best] is the smallest; compare the arc leaving seq[best]
      // (forward successor) with the arc entering seq[best-1] (backward successor).
      const auto& pb = seq[best];
      int next_fwd = xs[static_cast<std::size_t>(pb.crossing)].arcs[static_cast<std::size_t>(mod4(pb.in_slot + 2))];
      const auto& pp = seq[(best + m - 1) % m];
      int next_rev = xs[static_cast<std::size_t>(pp.crossing)].arcs[static_cast<std::size_t>(pp.in_slot)];
      forward = next_fwd <= next_rev;
    }
    if (std::find(reverse.begin(), reverse.end(), static_cast<int>(ci)) != reverse.end()) forward = !forward;
    if (!forward) {
      std::vector<Passage> rev;
      rev.reserve(seq.size());
      for (auto it = seq.rbegin(); it != seq.rend(); ++it) rev.push_back({it->crossing, mod4(it->in_slot + 2)});
      seq = std::move(rev);
    }
  }

  // Rotate crossings so slot 0 is the incoming under-strand.
  std::vector<int> rot(static_cast<std::size_t>(n), 0);
  std::vector<int> over_entry(static_cast<std::size_t>(n), -1);
  for (const auto& seq : comps)
    for (const auto& p : seq) {
      if (p.in_slot % 2 == 0)
        rot[static_cast<std::size_t>(p.crossing)] = p.in_slot;
      else
        over_entry[static_cast<std::size_t>(p.crossing)] = p.in_slot;
    }

  Diagram d;
  d.free_loops_ = loops;
  d.crossings_.resize(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    auto& out = d.crossings_[static_cast<std::size_t>(c)];
    out.region = xs[static_cast<std::size_t>(c)].region;
    int r = rot[static_cast<std::size_t>(c)];
    out.sign = mod4(over_entry[static_cast<std::size_t>(c)] - r) == 3 ? 1 : -1;
  }
  for (auto& seq : comps)
    for (auto& p : seq) p.in_slot = mod4(p.in_slot - rot[static_cast<std::size_t>(p.crossing)]);

  // Number arcs consecutively along each component.
  d.arc_component_.resize(static_cast<std::size_t>(2 * n));
  d.tails_.resize(static_cast<std::size_t>(2 * n));
  d.heads_.resize(static_cast<std::size_t>(2 * n));
  int base = 0;
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& seq = comps[ci];
    const int m = static_cast<int>(seq.size());
    for (int j = 0; j < m; ++j) {
      const auto& p = seq[static_cast<std::size_t>(j)];
      const auto& q = seq[static_cast<std::size_t>((j + 1) % m)];
      int label = base + (j + 1) % m;
      Slot tail{p.crossing, mod4(p.in_slot + 2)};
      Slot head{q.crossing, q.in_slot};
      d.crossings_[static_cast<std::size_t>(tail.crossing)].arcs[static_cast<std::size_t>(tail.slot)] = label;
      d.crossings_[static_cast<std::size_t>(head.crossing)].arcs[static_cast<std::size_t>(head.slot)] = label;
      d.tails_[static_cast<std::size_t>(label)] = tail;
      d.heads_[static_cast<std::size_t>(label)] = head;
      d.arc_component_[static_cast<std::size_t>(label)] = static_cast<int>(ci);
    }
    base += m;
  }
  d.passages_ = std::move(comps);

  // Planarity: a connected 4-valent projection with c vertices has c + 2 faces.
  if (n > 0) {
    UnionFind pieces(static_cast<std::size_t>(n));
    for (int a = 0; a < 2 * n; ++a) pieces.unite(d.tails_[static_cast<std::size_t>(a)].crossing, d.heads_[static_cast<std::size_t>(a)].crossing);
    int p = 0;
    for (int c = 0; c < n; ++c) p += pieces.find(c) == c ? 1 : 0;
    int faces = static_cast<int>(d.faces().size());
    if (faces != n + 2 * p) throw DiagramError("PD code is not planar");
  }
  return d;
}

Slot Diagram::mate(Slot s) const {
  int arc = crossings_.at(static_cast<std::size_t>(s.crossing)).arcs.at(static_cast<std::size_t>(s.slot));
  const Slot& t = tails_[static_cast<std::size_t>(arc)];
  return t == s ? heads_[static_cast<std::size_t>(arc)] : t;
}

int Diagram::writhe() const {
  int w = 0;
  for (const auto& x : crossings_) w += x.sign;
  return w;
}

int Diagram::piece_count() const {
  const int n = crossing_count();
  int p = free_loops_;
  if (n == 0) return p;
  UnionFind uf(static_cast<std::size_t>(n));
  for (int a = 0; a < 2 * n; ++a) uf.unite(tails_[static_cast<std::size_t>(a)].crossing, heads_[static_cast<std::size_t>(a)].crossing);
  for (int c = 0; c < n; ++c) p += uf.find(c) == c ? 1 : 0;
  return p;
}

bool Diagram::is_connected() const { return piece_count() <= 1; }

std::vector<std::vector<Slot>> Diagram::faces() const {
  const int n = crossing_count();
  std::vector<std::array<bool, 4>> seen(static_cast<std::size_t>(n), {false, false, false, false});
  std::vector<std::vector<Slot>> out;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      if (seen[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)]) continue;
      std::vector<Slot> face;
      Slot cur{c, s};
      while (!seen[static_cast<std::size_t>(cur.crossing)][static_cast<std::size_t>(cur.slot)]) {
        seen[static_cast<std::size_t>(cur.crossing)][static_cast<std::size_t>(cur.slot)] = true;
        face.push_back(cur);
        Slot m = mate(cur);
        cur = {m.crossing, mod4(m.slot + 3)};
      }
      out.push_back(std::move(face));
    }
  return out;
}

std::vector<RawCrossing> Diagram::raw() const {
  std::vector<RawCrossing> out;
  out.reserve(crossings_.size());
  for (const auto& x : crossings_) out.push_back(RawCrossing{x.arcs, x.region, -1});
  return out;
}

std::vector<RawCrossing> Diagram::oriented_raw() const {
  std::vector<RawCrossing> out;
  out.reserve(crossings_.size());
  for (const auto& x : crossings_) out.push_back(RawCrossing{x.arcs, x.region, x.sign > 0 ? 3 : 1});
  return out;
}

Diagram Diagram::smooth(int i, Resolution r) const {
  if (i < 0 || i >= crossing_count()) throw DiagramError("crossing index out of range");
  auto xs = oriented_raw();
  const auto a = xs[static_cast<std::size_t>(i)].arcs;
  xs.erase(xs.begin() + i);
  std::vector<std::pair<int, int>> joins;
  if (r == Resolution::A)
    joins = {{a[0], a[1]}, {a[2], a[3]}};
  else
    joins = {{a[1], a[2]}, {a[3], a[0]}};
  return build(std::move(xs), free_loops_, joins, Mode::Relaxed);
}

namespace {

// Exchanges over and under at an oriented crossing, keeping the orientation.
RawCrossing switched(const Crossing& x) {
  const auto& a = x.arcs;
  RawCrossing out;
  out.region = x.region;
  if (x.sign > 0) {
    out.arcs = {a[3], a[0], a[1], a[2]};
    out.over_in = 1;
  } else {
    out.arcs = {a[1], a[2], a[3], a[0]};
    out.over_in = 3;
  }
  return out;
}

}  // namespace

Diagram Diagram::switch_crossing(int i) const {
  if (i < 0 || i >= crossing_count()) throw DiagramError("crossing index out of range");
  auto xs = oriented_raw();
  xs[static_cast<std::size_t>(i)] = switched(crossings_[static_cast<std::size_t>(i)]);
  return build(std::move(xs), free_loops_, {}, Mode::Strict);
}

Diagram Diagram::mirror() const {
  std::vector<RawCrossing> xs;
  xs.reserve(crossings_.size());
  for (const auto& x : crossings_) xs.push_back(switched(x));
  return build(std::move(xs), free_loops_, {}, Mode::Strict);
}

Diagram Diagram::reverse_components(const std::vector<int>& components) const {
  for (int c : components)
    if (c < 0 || c >= component_count()) throw DiagramError("component index out of range");
  return build(oriented_raw(), free_loops_, {}, Mode::Strict, components);
}

Diagram Diagram::with_regions(const std::vector<int>& regions) const {
  if (regions.size() != crossings_.size()) throw DiagramError("region annotation length does not match crossing count");
  Diagram d = *this;
  for (std::size_t i = 0; i < regions.size(); ++i) d.crossings_[i].region = regions[i];
  return d;
}

Diagram Diagram::with_free_loops(int k) const {
  if (k < 0) throw DiagramError("negative free loop count");
  Diagram d = *this;
  d.free_loops_ = k;
  return d;
}

Diagram Diagram::remove_crossings(const std::vector<int>& indices) const {
  std::vector<bool> drop(crossings_.size(), false);
  for (int i : indices) {
    if (i < 0 || i >= crossing_count()) throw DiagramError("crossing index out of range");
    drop[static_cast<std::size_t>(i)] = true;
  }
  std::vector<RawCrossing> xs;
  std::vector<std::pair<int, int>> joins;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    const auto& x = crossings_[i];
    if (drop[i]) {
      joins.emplace_back(x.arcs[0], x.arcs[2]);
      joins.emplace_back(x.arcs[1], x.arcs[3]);
    } else {
      xs.push_back(RawCrossing{x.arcs, x.region, x.sign > 0 ? 3 : 1});
    }
  }
  return build(std::move(xs), free_loops_, joins, Mode::Relaxed);
}

std::vector<Diagram> Diagram::pieces() const {
  const int n = crossing_count();
  std::vector<Diagram> out;
  if (n > 0) {
    UnionFind uf(static_cast<std::size_t>(n));
    for (int a = 0; a < 2 * n; ++a) uf.unite(tails_[static_cast<std::size_t>(a)].crossing, heads_[static_cast<std::size_t>(a)].crossing);
    std::map<int, std::vector<RawCrossing>> groups;
    const auto xs = oriented_raw();
    for (int c = 0; c < n; ++c) groups[uf.find(c)].push_back(xs[static_cast<std::size_t>(c)]);
    if (groups.size() == 1 && free_loops_ == 0) return {*this};
    for (auto& [root, g] : groups) out.push_back(build(std::move(g), 0, {}, Mode::Strict));
  }
  for (int k = 0; k < free_loops_; ++k) out.push_back(unknot());
  return out;
}

std::string Diagram::to_pd() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : crossings_) {
    if (!first) out << ' ';
    first = false;
    out << "X[" << x.arcs[0] + 1 << ',' << x.arcs[1] + 1 << ',' << x.arcs[2] + 1 << ',' << x.arcs[3] + 1 << ']';
  }
  for (int k = 0; k < free_loops_; ++k) {
    if (!first) out << ' ';
    first = false;
    out << "O[" << arc_count() + k + 1 << ']';
  }
  return out.str();
}

// ------------------------------------------------------------------ parsing

namespace {

[[noreturn]] void malformed(std::string_view tok) {
  throw DiagramError("malformed token '" + std::string(tok) + "'");
}

std::vector<int> parse_int_list(std::string_view tok, std::string_view body) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i <= body.size()) {
    std::size_t j = body.find(',', i);
    if (j == std::string_view::npos) j = body.size();
    std::string_view part = body.substr(i, j - i);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
    if (part.empty() || part.size() > 9) malformed(tok);
    for (char ch : part)
      if (!std::isdigit(static_cast<unsigned char>(ch))) malformed(tok);
    int v = std::stoi(std::string(part));
    if (v <= 0) malformed(tok);
    out.push_back(v);
    i = j + 1;
  }
  return out;
}

}  // namespace

Diagram parse_pd(std::string_view text) {
  std::vector<std::array<int, 4>> crossings;
  std::vector<int> loops;
  std::string orient;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::string_view v(line);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    if (v.empty() || v.front() == '#') continue;
    if (v.rfind("orient:", 0) == 0) {
      orient = std::string(v.substr(7));
      continue;
    }
    // Tokens may contain spaces inside brackets, so scan bracket-aware.
    std::size_t i = 0;
    while (i < v.size()) {
      if (std::isspace(static_cast<unsigned char>(v[i]))) {
        ++i;
        continue;
      }
      std::size_t close = v.find(']', i);
      std::size_t next_space = i;
      while (next_space < v.size() && !std::isspace(static_cast<unsigned char>(v[next_space]))) ++next_space;
      if (close == std::string_view::npos) malformed(v.substr(i, next_space - i));
      std::string_view tok = v.substr(i, close - i + 1);
      i = close + 1;
      if (tok.size() < 4 || tok[1] != '[') malformed(tok);
      auto vals = parse_int_list(tok, tok.substr(2, tok.size() - 3));
      if (tok[0] == 'X') {
        if (vals.size() != 4) malformed(tok);
        crossings.push_back({vals[0], vals[1], vals[2], vals[3]});
      } else if (tok[0] == 'O') {
        if (vals.size() != 1) malformed(tok);
        loops.push_back(vals[0]);
      } else {
        malformed(tok);
      }
    }
  }
  if (crossings.empty() && loops.empty()) throw DiagramError("empty PD code");
  std::vector<int> seen;
  for (const auto& x : crossings) seen.insert(seen.end(), x.begin(), x.end());
  for (int l : loops)
    if (std::find(seen.begin(), seen.end(), l) != seen.end())
      throw DiagramError("free loop label " + std::to_string(l) + " is also used by a crossing");
  std::sort(loops.begin(), loops.end());
  if (std::adjacent_find(loops.begin(), loops.end()) != loops.end()) throw DiagramError("duplicate free loop label");
  Diagram d = Diagram::from_pd(crossings, static_cast<int>(loops.size()));
  if (!orient.empty()) d = apply_orientation(d, orient);
  return d;
}

Diagram apply_orientation(const Diagram& d, std::string_view spec) {
  std::vector<int> rev;
  std::string s(spec);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::string item;
  while (in >> item) {
    auto eq = item.find('=');
    if (item.size() < 4 || item[0] != 'c' || eq == std::string::npos || eq + 2 != item.size())
      throw DiagramError("malformed orientation entry '" + item + "'");
    int k = 0;
    try {
      k = std::stoi(item.substr(1, eq - 1));
    } catch (const std::exception&) {
      throw DiagramError("malformed orientation entry '" + item + "'");
    }
    if (k < 1 || k > d.component_count()) throw DiagramError("orientation refers to missing component c" + std::to_string(k));
    char dir = item[eq + 1];
    if (dir != '+' && dir != '-') throw DiagramError("malformed orientation entry '" + item + "'");
    if (dir == '-' && k - 1 < static_cast<int>(d.passages().size())) rev.push_back(k - 1);
  }
  return rev.empty() ? d : d.reverse_components(rev);
}

Diagram connected_sum(const Diagram& d1, const Diagram& d2) {
  if (d1.crossing_count() == 0 && d1.free_loops() == 0) return d2;
  if (d2.crossing_count() == 0 && d2.free_loops() == 0) return d1;
  if (d1.crossing_count() == 0) return disjoint_union(Diagram::unlink(d1.free_loops() - 1), d2);
  if (d2.crossing_count() == 0) return disjoint_union(d1, Diagram::unlink(d2.free_loops() - 1));
  std::vector<RawCrossing> xs;
  const int off = d1.arc_count();
  for (const auto& x : d1.crossings()) xs.push_back(RawCrossing{x.arcs, x.region, x.sign > 0 ? 3 : 1});
  for (const auto& x : d2.crossings()) {
    RawCrossing r{x.arcs, x.region, x.sign > 0 ? 3 : 1};
    for (auto& a : r.arcs) a += off;
    xs.push_back(r);
  }
  // Arc 0 of d1 now ends where arc 0 of d2 ended, and vice versa.
  Slot h1 = d1.arc_head(0);
  Slot h2 = d2.arc_head(0);
  xs[static_cast<std::size_t>(h1.crossing)].arcs[static_cast<std::size_t>(h1.slot)] = off;
  xs[static_cast<std::size_t>(d1.crossing_count() + h2.crossing)].arcs[static_cast<std::size_t>(h2.slot)] = 0;
  return Diagram::from_raw(xs, d1.free_loops() + d2.free_loops());
}

Diagram disjoint_union(const Diagram& d1, const Diagram& d2) {
  std::vector<RawCrossing> xs;
  const int off = d1.arc_count();
  for (const auto& x : d1.crossings()) xs.push_back(RawCrossing{x.arcs, x.region, x.sign > 0 ? 3 : 1});
  for (const auto& x : d2.crossings()) {
    RawCrossing r{x.arcs, x.region, x.sign > 0 ? 3 : 1};
    for (auto& a : r.arcs) a += off;
    xs.push_back(r);
  }
  return Diagram::from_raw(xs, d1.free_loops() + d2.free_loops());
}

}  // namespace turaev

namespace turaev {

Diagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw DiagramError("a braid needs at least one strand");
  std::vector<int> cur(static_cast<std::size_t>(strands));
  std::iota(cur.begin(), cur.end(), 0);
  const std::vector<int> bottom = cur;
  int next = strands;
  std::vector<RawCrossing> xs;
  for (int g : word) {
    const int i = std::abs(g) - 1;
    if (g == 0 || i + 1 >= strands) throw DiagramError("braid generator " + std::to_string(g) + " out of range");
    auto& left = cur[static_cast<std::size_t>(i)];
    auto& right = cur[static_cast<std::size_t>(i + 1)];
    const int tl = next++, tr = next++;
    // Strands run upward; the under-strand is listed first.
    if (g > 0)
      xs.push_back(RawCrossing{{right, tr, tl, left}, -1, 3});
    else
      xs.push_back(RawCrossing{{left, right, tr, tl}, -1, 1});
    left = tl;
    right = tr;
  }
  std::vector<std::pair<int, int>> joins;
  for (std::size_t i = 0; i < cur.size(); ++i) joins.emplace_back(cur[i], bottom[i]);
  return Diagram::from_raw(xs, 0, joins);
}

}  // namespace turaev
