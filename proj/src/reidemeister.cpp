#include "turaev/reidemeister.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "turaev/turaev.hpp"

namespace turaev {

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

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
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// ------------------------------------------------------------ local models

// A tangle in a disk: crossings (under-strand on slots 0, 2) and strands
// running straight through. Endpoint labels come first.
struct LocalTangle {
  std::vector<std::array<int, 4>> crossings;
  Matching straight;
  int labels = 0;
};

// Triangle strands ranked from the bottom (0) to the top (2). Strand i runs
// x_i -> y_(i+1) and crosses strand i-1 at corner i of the triangle.
constexpr std::array<int, 3> kRank{1, 2, 0};
constexpr std::array<int, 3> kX{4, 0, 2};
constexpr std::array<int, 3> kY{5, 1, 3};

std::array<int, 4> rotated(const std::array<int, 4>& k) { return {k[1], k[2], k[3], k[0]}; }

LocalTangle model(Move m, bool after) {
  LocalTangle t;
  switch (m) {
    case Move::RI:
    case Move::RIInverse:
      t.labels = 3;
      if (after == (m == Move::RI))
        t.crossings = {{0, 1, 2, 2}};
      else
        t.straight = {{0, 1}};
      break;
    case Move::RII:
    case Move::RIIInverse:
      t.labels = 6;
      // The strand a-c is pushed over b-d; 4 and 5 bound the bigon.
      if (after == (m == Move::RII))
        t.crossings = {{5, 4, 1, 0}, {3, 4, 5, 2}};
      else
        t.straight = {{0, 2}, {1, 3}};
      break;
    case Move::RIII:
    case Move::RIIIMirror:
      t.labels = 9;
      for (int i = 0; i < 3; ++i) {
        const auto u = static_cast<std::size_t>(i), prev = static_cast<std::size_t>((i + 2) % 3),
                   next = static_cast<std::size_t>((i + 1) % 3);
        std::array<int, 4> k = after ? std::array<int, 4>{kY[next], kX[prev], 6 + i, 6 + static_cast<int>(prev)}
                                     : std::array<int, 4>{6 + i, 6 + static_cast<int>(prev), kX[u], kY[u]};
        const bool over = kRank[u] > kRank[prev];
        if (over != (m == Move::RIIIMirror)) k = rotated(k);
        t.crossings.push_back(k);
      }
      break;
  }
  return t;
}

void smooth_into(UnionFind& uf, const std::array<int, 4>& k, Resolution r) {
  if (r == Resolution::A) {
    uf.unite(k[0], k[1]);
    uf.unite(k[2], k[3]);
  } else {
    uf.unite(k[1], k[2]);
    uf.unite(k[3], k[0]);
  }
}

int closed_circles(const LocalTangle& t, Resolution r, const Matching& closure) {
  UnionFind uf(static_cast<std::size_t>(t.labels));
  for (auto [a, b] : t.straight) uf.unite(a, b);
  for (auto [a, b] : closure) uf.unite(a, b);
  std::vector<char> used(static_cast<std::size_t>(t.labels), 0);
  for (auto [a, b] : t.straight) used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 1;
  for (const auto& k : t.crossings) {
    smooth_into(uf, k, r);
    for (int x : k) used[static_cast<std::size_t>(x)] = 1;
  }
  // Labels of the other model (the bigon's inner arcs, say) are not present.
  int count = 0;
  for (int i = 0; i < t.labels; ++i) count += used[static_cast<std::size_t>(i)] && uf.find(i) == i;
  return count;
}

Matching normalized(Matching m) {
  for (auto& [a, b] : m)
    if (a > b) std::swap(a, b);
  std::sort(m.begin(), m.end());
  return m;
}

// Endpoint labels in the order they meet the boundary circle.
std::vector<int> boundary_order(int points) {
  if (points == 4) return {0, 1, 3, 2};
  std::vector<int> v(static_cast<std::size_t>(points));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void planar_rec(const std::vector<int>& pts, Matching& cur, const std::function<void(Matching&)>& done) {
  if (pts.empty()) {
    done(cur);
    return;
  }
  for (std::size_t j = 1; j < pts.size(); j += 2) {
    cur.emplace_back(pts[0], pts[j]);
    std::vector<int> inner(pts.begin() + 1, pts.begin() + static_cast<std::ptrdiff_t>(j));
    std::vector<int> outer(pts.begin() + static_cast<std::ptrdiff_t>(j) + 1, pts.end());
    planar_rec(inner, cur, [&](Matching& m) { planar_rec(outer, m, done); });
    cur.pop_back();
  }
}

const char* roman(std::size_t i) {
  static const char* names[] = {"(i)", "(ii)", "(iii)", "(iv)", "(v)", "(vi)"};
  return i < 6 ? names[i] : "(?)";
}

// ------------------------------------------------------------ applying moves

bool outgoing(const Diagram& d, Slot s) {
  const int arc = d.crossing(s.crossing).arcs[static_cast<std::size_t>(s.slot)];
  return d.arc_tail(arc) == s;
}

int arc_at(const Diagram& d, Slot s) { return d.crossing(s.crossing).arcs[static_cast<std::size_t>(s.slot)]; }

const std::vector<Slot>& face_at(const std::vector<std::vector<Slot>>& faces, int f) {
  if (f < 0 || f >= static_cast<int>(faces.size())) throw MoveError("face index " + std::to_string(f) + " out of range");
  return faces[static_cast<std::size_t>(f)];
}

bool is_kink(const Diagram& d, int c) {
  const auto& k = d.crossing(c).arcs;
  for (std::size_t j = 0; j < 4; ++j)
    if (k[j] == k[(j + 1) % 4]) return true;
  return false;
}

// A bigon where one strand lies on top at both corners.
bool is_reducible_bigon(const std::vector<Slot>& face) {
  if (face.size() != 2 || face[0].crossing == face[1].crossing) return false;
  return face[0].slot % 2 == mod4(face[1].slot + 1) % 2;
}

struct Triangle {
  std::array<int, 3> c{};  // corner crossings
  std::array<int, 3> s{};  // slot where edge i leaves corner i
  std::array<int, 3> h{};  // slot where edge i-1 arrives at corner i
  std::array<int, 3> rank{};
};

std::optional<Triangle> triangle(const Diagram& d, const std::vector<Slot>& face) {
  if (face.size() != 3) return std::nullopt;
  Triangle t;
  for (std::size_t i = 0; i < 3; ++i) {
    t.c[i] = face[i].crossing;
    t.s[i] = face[i].slot;
    t.h[i] = d.mate(face[(i + 2) % 3]).slot;
  }
  if (t.c[0] == t.c[1] || t.c[1] == t.c[2] || t.c[0] == t.c[2]) return std::nullopt;
  int ones = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    t.rank[i] = t.s[i] % 2 + t.h[(i + 1) % 3] % 2;
    ones += t.rank[i] == 1;
  }
  if (ones == 3) return std::nullopt;  // alternating triangle
  return t;
}

// Rotation k with rank[(i + k) % 3] matching the model, or -1.
int model_rotation(const Triangle& t, bool mirror) {
  for (int k = 0; k < 3; ++k) {
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      int want = kRank[static_cast<std::size_t>(i)];
      if (mirror) want = 2 - want;
      ok = ok && t.rank[static_cast<std::size_t>((i + k) % 3)] == want;
    }
    if (ok) return k;
  }
  return -1;
}

// A crossing whose under-strand enters at slot `under_in` (0 or 2) and
// over-strand at `over_in` (1 or 3), turned so the under-strand enters at 0.
RawCrossing oriented(const std::array<int, 4>& k, int under_in, int over_in) {
  if (under_in == 0) return RawCrossing{k, -1, over_in};
  return RawCrossing{{k[2], k[3], k[0], k[1]}, -1, over_in == 1 ? 3 : 1};
}

Diagram apply_ri(const Diagram& d, const MoveSite& site) {
  const int n = d.crossing_count();
  if (site.arc < 0 || site.arc >= d.arc_count()) throw MoveError("RI site: no arc " + std::to_string(site.arc));
  const int x = site.arc, y = 2 * n, loop = 2 * n + 1;
  auto xs = d.oriented_raw();
  const Slot head = d.arc_head(x);
  xs[static_cast<std::size_t>(head.crossing)].arcs[static_cast<std::size_t>(head.slot)] = y;
  if (!site.over_first)
    xs.push_back(site.sign > 0 ? oriented({x, y, loop, loop}, 0, 3) : oriented({x, loop, loop, y}, 0, 1));
  else
    xs.push_back(site.sign > 0 ? oriented({loop, loop, y, x}, 0, 3) : oriented({y, loop, loop, x}, 2, 3));
  return Diagram::from_raw(xs, d.free_loops());
}

Diagram apply_rii(const Diagram& d, const MoveSite& site) {
  const auto faces = d.faces();
  const auto& face = face_at(faces, site.face);
  const int len = static_cast<int>(face.size());
  if (site.dart1 < 0 || site.dart1 >= len || site.dart2 < 0 || site.dart2 >= len || site.dart1 == site.dart2)
    throw MoveError("RII site: bad edge positions on face " + std::to_string(site.face));
  const Slot p = face[static_cast<std::size_t>(site.dart1)], q = face[static_cast<std::size_t>(site.dart2)];
  const int e1 = arc_at(d, p), e2 = arc_at(d, q);
  if (e1 == e2) throw MoveError("RII site: both edges lie on one arc");
  const int n = d.crossing_count();
  const int m1 = 2 * n, n1 = 2 * n + 1, m2 = 2 * n + 2, n2 = 2 * n + 3;
  const bool fwd1 = outgoing(d, p), fwd2 = outgoing(d, q);
  auto xs = d.oriented_raw();
  const Slot y1 = d.mate(p), y2 = d.mate(q);
  xs[static_cast<std::size_t>(y1.crossing)].arcs[static_cast<std::size_t>(y1.slot)] = n1;
  xs[static_cast<std::size_t>(y2.crossing)].arcs[static_cast<std::size_t>(y2.slot)] = n2;
  // The first edge makes a finger across the face, crossing the second edge
  // at P and coming back at Q.
  if (site.first_over) {
    xs.push_back(oriented({m2, m1, n2, e1}, fwd2 ? 0 : 2, fwd1 ? 3 : 1));
    xs.push_back(oriented({e2, m1, m2, n1}, fwd2 ? 0 : 2, fwd1 ? 1 : 3));
  } else {
    xs.push_back(oriented({e1, m2, m1, n2}, fwd1 ? 0 : 2, fwd2 ? 1 : 3));
    xs.push_back(oriented({n1, e2, m1, m2}, fwd1 ? 2 : 0, fwd2 ? 1 : 3));
  }
  return Diagram::from_raw(xs, d.free_loops());
}

Diagram apply_riii(const Diagram& d, const MoveSite& site) {
  const auto faces = d.faces();
  auto tri = triangle(d, face_at(faces, site.face));
  if (!tri) throw MoveError("RIII site: face " + std::to_string(site.face) + " is not a triangle with a top strand");
  const auto& t = *tri;
  const int n = d.crossing_count();
  std::array<int, 3> lx{}, ly{};
  std::array<bool, 3> fwd{};
  for (std::size_t i = 0; i < 3; ++i) {
    const Slot x{t.c[i], mod4(t.h[i] + 1)}, y{t.c[i], mod4(t.h[i] + 2)};
    lx[i] = arc_at(d, x);
    ly[i] = arc_at(d, y);
    fwd[i] = !outgoing(d, x);
  }
  std::vector<RawCrossing> xs;
  const auto old = d.oriented_raw();
  for (int c = 0; c < n; ++c)
    if (c != t.c[0] && c != t.c[1] && c != t.c[2]) xs.push_back(old[static_cast<std::size_t>(c)]);
  // Each strand now meets its two neighbours in the opposite order.
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t prev = (i + 2) % 3, next = (i + 1) % 3;
    const int mi = 2 * n + static_cast<int>(i), mp = 2 * n + static_cast<int>(prev);
    const bool under = t.s[i] % 2 == 0;
    if (under)
      xs.push_back(oriented({ly[next], lx[prev], mi, mp}, fwd[i] ? 2 : 0, fwd[prev] ? 1 : 3));
    else
      xs.push_back(oriented({lx[prev], mi, mp, ly[next]}, fwd[prev] ? 0 : 2, fwd[i] ? 1 : 3));
  }
  return Diagram::from_raw(xs, d.free_loops());
}

}  // namespace

// ------------------------------------------------------------ names

const char* to_string(Move m) {
  switch (m) {
    case Move::RI: return "RI";
    case Move::RIInverse: return "RI-inv";
    case Move::RII: return "RII";
    case Move::RIIInverse: return "RII-inv";
    case Move::RIII: return "RIII";
    case Move::RIIIMirror: return "RIII-mirror";
  }
  return "?";
}

Move parse_move(const std::string& s) {
  for (Move m : all_moves())
    if (s == to_string(m)) return m;
  throw MoveError("unknown move '" + s + "'; expected RI, RI-inv, RII, RII-inv, RIII or RIII-mirror");
}

const std::vector<Move>& all_moves() {
  static const std::vector<Move> v{Move::RI, Move::RIInverse, Move::RII, Move::RIIInverse, Move::RIII, Move::RIIIMirror};
  return v;
}

std::string MoveSite::describe() const {
  std::ostringstream out;
  out << to_string(move);
  switch (move) {
    case Move::RI: out << " arc=" << arc << " sign=" << sign << (over_first ? " over-first" : " under-first"); break;
    case Move::RIInverse: out << " crossing=" << crossing; break;
    case Move::RII: out << " face=" << face << " edges=" << dart1 << "," << dart2 << (first_over ? " first-over" : " second-over"); break;
    default: out << " face=" << face; break;
  }
  return out.str();
}

std::vector<MoveSite> move_sites(const Diagram& d, Move m) {
  std::vector<MoveSite> out;
  const int n = d.crossing_count();
  if (n == 0) return out;
  MoveSite s;
  s.move = m;
  switch (m) {
    case Move::RI:
      for (int a = 0; a < d.arc_count(); ++a)
        for (int sign : {1, -1})
          for (bool over : {false, true}) {
            s.arc = a;
            s.sign = sign;
            s.over_first = over;
            out.push_back(s);
          }
      break;
    case Move::RIInverse:
      for (int c = 0; c < n; ++c)
        if (is_kink(d, c)) {
          s.crossing = c;
          out.push_back(s);
        }
      break;
    case Move::RII: {
      const auto faces = d.faces();
      for (std::size_t f = 0; f < faces.size(); ++f)
        for (std::size_t i = 0; i < faces[f].size(); ++i)
          for (std::size_t j = 0; j < faces[f].size(); ++j) {
            if (i == j || arc_at(d, faces[f][i]) == arc_at(d, faces[f][j])) continue;
            for (bool over : {true, false}) {
              s.face = static_cast<int>(f);
              s.dart1 = static_cast<int>(i);
              s.dart2 = static_cast<int>(j);
              s.first_over = over;
              out.push_back(s);
            }
          }
      break;
    }
    case Move::RIIInverse: {
      const auto faces = d.faces();
      for (std::size_t f = 0; f < faces.size(); ++f)
        if (is_reducible_bigon(faces[f])) {
          s.face = static_cast<int>(f);
          out.push_back(s);
        }
      break;
    }
    case Move::RIII:
    case Move::RIIIMirror: {
      const auto faces = d.faces();
      for (std::size_t f = 0; f < faces.size(); ++f)
        if (auto t = triangle(d, faces[f]); t && model_rotation(*t, m == Move::RIIIMirror) >= 0) {
          s.face = static_cast<int>(f);
          out.push_back(s);
        }
      break;
    }
  }
  return out;
}

Diagram apply_move(const Diagram& d, const MoveSite& site) {
  if (d.crossing_count() == 0) throw MoveError("moves need a diagram with crossings");
  switch (site.move) {
    case Move::RI: return apply_ri(d, site);
    case Move::RIInverse:
      if (site.crossing < 0 || site.crossing >= d.crossing_count() || !is_kink(d, site.crossing))
        throw MoveError("RI-inv site: crossing " + std::to_string(site.crossing) + " is not a kink");
      return d.remove_crossings({site.crossing});
    case Move::RII: return apply_rii(d, site);
    case Move::RIIInverse: {
      const auto faces = d.faces();
      const auto& face = face_at(faces, site.face);
      if (!is_reducible_bigon(face)) throw MoveError("RII-inv site: face " + std::to_string(site.face) + " is not a reducible bigon");
      return d.remove_crossings({face[0].crossing, face[1].crossing});
    }
    case Move::RIII:
    case Move::RIIIMirror: return apply_riii(d, site);
  }
  throw MoveError("unknown move");
}

// ------------------------------------------------------------ closures

std::vector<Matching> planar_matchings(int points) {
  if (points < 2 || points % 2 != 0) throw MoveError("matchings need an even, positive number of points");
  std::vector<Matching> out;
  Matching cur;
  planar_rec(boundary_order(points), cur, [&](Matching& m) { out.push_back(normalized(m)); });
  return out;
}

std::string matching_string(const Matching& m) {
  std::string s;
  for (auto [a, b] : normalized(m)) {
    if (!s.empty()) s += ' ';
    s += static_cast<char>('a' + a);
    s += static_cast<char>('a' + b);
  }
  return s;
}

std::string closure_name(const Matching& m, int points) {
  const auto all = planar_matchings(points);
  const auto key = normalized(m);
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == key) return roman(i);
  throw MoveError("matching " + matching_string(m) + " is not planar");
}

int endpoint_count(Move m) {
  switch (m) {
    case Move::RI:
    case Move::RIInverse: return 2;
    case Move::RII:
    case Move::RIIInverse: return 4;
    default: return 6;
  }
}

std::string TangleClosure::name() const {
  const int k = endpoint_count(move);
  return std::string("A") + closure_name(a_closure, k) + " B" + closure_name(b_closure, k);
}

MoveEffect analyze_closure(const TangleClosure& closure) {
  const int k = endpoint_count(closure.move);
  closure_name(closure.a_closure, k);  // rejects non-planar matchings
  closure_name(closure.b_closure, k);
  const LocalTangle before = model(closure.move, false), after = model(closure.move, true);
  MoveEffect e;
  e.delta_c = static_cast<int>(after.crossings.size()) - static_cast<int>(before.crossings.size());
  e.delta_sA = closed_circles(after, Resolution::A, closure.a_closure) - closed_circles(before, Resolution::A, closure.a_closure);
  e.delta_sB = closed_circles(after, Resolution::B, closure.b_closure) - closed_circles(before, Resolution::B, closure.b_closure);
  e.delta_gT = Rational(e.delta_c - e.delta_sA - e.delta_sB, 2);
  return e;
}

int closure_circles(Move m, Resolution r, bool after, const Matching& closure) {
  closure_name(closure, endpoint_count(m));
  return closed_circles(model(m, after), r, closure);
}

Matching inner_matching(Move m, Resolution r, bool after) {
  const LocalTangle t = model(m, after);
  UnionFind uf(static_cast<std::size_t>(t.labels));
  for (auto [a, b] : t.straight) uf.unite(a, b);
  for (const auto& k : t.crossings) smooth_into(uf, k, r);
  const int k = endpoint_count(m);
  Matching out;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (uf.find(a) == uf.find(b)) out.emplace_back(a, b);
  return out;
}

std::vector<TangleClosure> enumerate_closures(Move m) {
  std::vector<TangleClosure> out;
  const auto all = planar_matchings(endpoint_count(m));
  for (const auto& a : all)
    for (const auto& b : all) out.push_back(TangleClosure{m, a, b});
  return out;
}

std::vector<TangleClosure> enumerate_decreasing_closures(Move m) {
  std::vector<TangleClosure> out;
  for (auto& c : enumerate_closures(m))
    if (analyze_closure(c).delta_gT < Rational(0)) out.push_back(c);
  return out;
}

std::string moves_csv_header() { return "move,closure_A,closure_B,delta_c,delta_sA,delta_sB,delta_gT"; }

std::string moves_csv_row(const TangleClosure& c, const MoveEffect& e) {
  const int k = endpoint_count(c.move);
  std::ostringstream out;
  out << to_string(c.move) << ',' << closure_name(c.a_closure, k) << ',' << closure_name(c.b_closure, k) << ','
      << e.delta_c << ',' << e.delta_sA << ',' << e.delta_sB << ',' << to_string(e.delta_gT);
  return out.str();
}

// ------------------------------------------------------------ locality

std::optional<LocalityCheck> check_locality(const Diagram& d, const MoveSite& site) {
  const Diagram after = apply_move(d, site);
  int global = 0;
  try {
    global = turaev_genus_diagram(after).g_T_diagram - turaev_genus_diagram(d).g_T_diagram;
  } catch (const DiagramError&) {
    return std::nullopt;
  }
  // The diagram that carries the tangle's crossings, and where each model
  // endpoint sits in it.
  Move model_move = site.move;
  const bool forward = site.move == Move::RI || site.move == Move::RII;
  const Diagram& host = forward ? after : d;
  std::vector<Slot> ends;
  std::vector<int> inside;
  switch (site.move) {
    case Move::RI:
    case Move::RIInverse: {
      const int c = site.move == Move::RI ? after.crossing_count() - 1 : site.crossing;
      const auto& k = host.crossing(c).arcs;
      for (int j = 0; j < 4; ++j)
        if (k[static_cast<std::size_t>(j)] == k[static_cast<std::size_t>((j + 1) % 4)]) {
          ends = {{c, mod4(j + 2)}, {c, mod4(j + 3)}};
          break;
        }
      inside = {c};
      break;
    }
    case Move::RII:
    case Move::RIIInverse: {
      std::optional<std::vector<Slot>> bigon;
      const auto faces = host.faces();
      if (site.move == Move::RIIInverse) {
        bigon = faces[static_cast<std::size_t>(site.face)];
      } else {
        const int p = host.crossing_count() - 2, q = p + 1;
        for (const auto& f : faces)
          if (f.size() == 2 && ((f[0].crossing == p && f[1].crossing == q) || (f[0].crossing == q && f[1].crossing == p)))
            bigon = f;
      }
      if (!bigon) throw MoveError("new bigon not found");
      const Slot p = (*bigon)[0], q = (*bigon)[1];
      ends = {{p.crossing, mod4(p.slot + 2)}, {p.crossing, mod4(p.slot + 3)}, {q.crossing, mod4(q.slot + 3)},
              {q.crossing, mod4(q.slot + 2)}};
      inside = {p.crossing, q.crossing};
      break;
    }
    case Move::RIII:
    case Move::RIIIMirror: {
      const auto faces = d.faces();
      const auto t = *triangle(d, faces[static_cast<std::size_t>(site.face)]);
      bool mirror = false;
      int k = model_rotation(t, false);
      if (k < 0) {
        mirror = true;
        k = model_rotation(t, true);
      }
      model_move = mirror ? Move::RIIIMirror : Move::RIII;
      ends.assign(6, Slot{});
      for (int i = 0; i < 3; ++i) {
        const auto ci = static_cast<std::size_t>((i + k) % 3);
        ends[static_cast<std::size_t>(kX[static_cast<std::size_t>(i)])] = Slot{t.c[ci], mod4(t.h[ci] + 1)};
        ends[static_cast<std::size_t>(kY[static_cast<std::size_t>(i)])] = Slot{t.c[ci], mod4(t.h[ci] + 2)};
      }
      inside = {t.c[0], t.c[1], t.c[2]};
      break;
    }
  }
  auto outside = [&](Resolution r) {
    UnionFind uf(static_cast<std::size_t>(host.arc_count()));
    for (int c = 0; c < host.crossing_count(); ++c)
      if (std::find(inside.begin(), inside.end(), c) == inside.end()) smooth_into(uf, host.crossing(c).arcs, r);
    Matching m;
    for (std::size_t a = 0; a < ends.size(); ++a)
      for (std::size_t b = a + 1; b < ends.size(); ++b)
        if (uf.find(arc_at(host, ends[a])) == uf.find(arc_at(host, ends[b])))
          m.emplace_back(static_cast<int>(a), static_cast<int>(b));
    if (m.size() * 2 != ends.size()) throw MoveError("outside state does not pair the tangle endpoints");
    return m;
  };
  LocalityCheck out;
  out.closure = TangleClosure{model_move, outside(Resolution::A), outside(Resolution::B)};
  out.local = analyze_closure(out.closure);
  out.global_delta_gT = global;
  out.consistent = out.local.delta_gT == Rational(global);
  return out;
}

}  // namespace turaev
