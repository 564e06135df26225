#include "turaev/bracket.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <thread>

namespace turaev {

namespace {

// Arc pairs joined by each resolution: A joins (0,1),(2,3); B joins (1,2),(3,0).
struct Smoothings {
  std::vector<std::array<int, 4>> a;  // a[i] = {p, q, r, s}: A pairs (p,q) (r,s)
  std::vector<std::array<int, 4>> b;
  int arcs = 0;
  int free_loops = 0;

  explicit Smoothings(const Diagram& d) : arcs(d.arc_count()), free_loops(d.free_loops()) {
    for (const auto& x : d.crossings()) {
      const auto& k = x.arcs;
      a.push_back({k[0], k[1], k[2], k[3]});
      b.push_back({k[1], k[2], k[3], k[0]});
    }
  }

  int circles(std::uint64_t bits) const {
    std::array<int, 64> parent{};
    for (int i = 0; i < arcs; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    int classes = arcs;
    auto unite = [&](int p, int q) {
      p = find(p);
      q = find(q);
      if (p != q) {
        parent[static_cast<std::size_t>(p)] = q;
        --classes;
      }
    };
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto& j = (bits >> i) & 1U ? b[i] : a[i];
      unite(j[0], j[1]);
      unite(j[2], j[3]);
    }
    return classes + free_loops;
  }
};

// hist[numB * width + circles] = number of states. Split diagrams can have
// more than c + 1 circles, so the row holds every count up to 2c + loops.
using Histogram = std::vector<std::uint64_t>;

int histogram_width(const Diagram& d) { return 2 * d.crossing_count() + d.free_loops() + 1; }

Histogram state_histogram(const Diagram& d, int max_crossings,
                          const std::function<bool(std::uint64_t)>& keep) {
  const int n = d.crossing_count();
  if (n > max_crossings || n > 30)
    throw BudgetError("state enumeration over " + std::to_string(n) + " crossings exceeds the budget of " +
                      std::to_string(std::min(max_crossings, 30)));
  const Smoothings sm(d);
  const int width = histogram_width(d);
  const std::uint64_t total = std::uint64_t{1} << n;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  if (total < (1U << 14)) workers = 1;
  std::vector<Histogram> parts(workers, Histogram(static_cast<std::size_t>((n + 1) * width), 0));
  auto run = [&](unsigned w) {
    std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    auto& h = parts[w];
    for (std::uint64_t s = lo; s < hi; ++s) {
      if (keep && !keep(s)) continue;
      int nb = std::popcount(s);
      ++h[static_cast<std::size_t>(nb * width + sm.circles(s))];
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  Histogram out = std::move(parts[0]);
  for (unsigned w = 1; w < workers; ++w)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += parts[w][i];
  return out;
}

// Sum of count * A^(n - 2 numB) * d^(circles - shift) over the histogram.
LaurentPoly1 expand(const Histogram& h, int n, int width, int shift) {
  LaurentPoly1 out;
  std::vector<LaurentPoly1> powers;
  for (int nb = 0; nb <= n; ++nb)
    for (int k = 0; k < width; ++k) {
      std::uint64_t cnt = h[static_cast<std::size_t>(nb * width + k)];
      if (cnt == 0) continue;
      int e = k - shift;
      while (static_cast<int>(powers.size()) <= e) powers.push_back(loop_value_power(static_cast<int>(powers.size())));
      out += powers[static_cast<std::size_t>(e)].shifted(n - 2 * nb) * Integer(cnt);
    }
  return out;
}

std::uint64_t state_bits(const Diagram& d, const KauffmanState& s) {
  if (static_cast<int>(s.size()) != d.crossing_count())
    throw DiagramError("state length " + std::to_string(s.size()) + " does not match crossing count " +
                       std::to_string(d.crossing_count()));
  if (s.size() > 64) throw BudgetError("state longer than 64 crossings");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == Resolution::B) bits |= std::uint64_t{1} << i;
  return bits;
}

}  // namespace

KauffmanState all_a_state(const Diagram& d) { return KauffmanState(static_cast<std::size_t>(d.crossing_count()), Resolution::A); }
KauffmanState all_b_state(const Diagram& d) { return KauffmanState(static_cast<std::size_t>(d.crossing_count()), Resolution::B); }

int state_sign(const KauffmanState& s) {
  int v = 0;
  for (auto r : s) v += r == Resolution::A ? 1 : -1;
  return v;
}

int state_circles(const Diagram& d, const KauffmanState& s) {
  if (d.crossing_count() > 32) {
    // Slow path for large diagrams: smooth one crossing at a time.
    if (static_cast<int>(s.size()) != d.crossing_count()) throw DiagramError("state length does not match crossing count");
    Diagram cur = d;
    for (int i = d.crossing_count() - 1; i >= 0; --i) cur = cur.smooth(i, s[static_cast<std::size_t>(i)]);
    return cur.free_loops();
  }
  return Smoothings(d).circles(state_bits(d, s));
}

LaurentPoly1 loop_value_power(int k) {
  if (k < 0) throw AlgebraError("negative power of the loop value");
  LaurentPoly1 delta;
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  return delta.pow(static_cast<unsigned>(k));
}

LaurentPoly1 bracket(const Diagram& d, int max_crossings) {
  const int n = d.crossing_count();
  if (n == 0) return loop_value_power(d.free_loops() - 1 < 0 ? 0 : d.free_loops() - 1);
  auto h = state_histogram(d, max_crossings, nullptr);
  return expand(h, n, histogram_width(d), 1);
}

int StateGraph::loop_edges() const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [](const auto& e) { return e.first == e.second; }));
}

StateGraph state_graph(const Diagram& d, const KauffmanState& s) {
  if (static_cast<int>(s.size()) != d.crossing_count()) throw DiagramError("state length does not match crossing count");
  const int arcs = d.arc_count();
  std::vector<int> parent(static_cast<std::size_t>(arcs));
  for (int i = 0; i < arcs; ++i) parent[static_cast<std::size_t>(i)] = i;
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  for (int i = 0; i < d.crossing_count(); ++i) {
    const auto& k = d.crossing(i).arcs;
    if (s[static_cast<std::size_t>(i)] == Resolution::A) {
      parent[static_cast<std::size_t>(find(k[0]))] = find(k[1]);
      parent[static_cast<std::size_t>(find(k[2]))] = find(k[3]);
    } else {
      parent[static_cast<std::size_t>(find(k[1]))] = find(k[2]);
      parent[static_cast<std::size_t>(find(k[3]))] = find(k[0]);
    }
  }
  std::vector<int> id(static_cast<std::size_t>(arcs), -1);
  StateGraph g;
  for (int a = 0; a < arcs; ++a) {
    int r = find(a);
    if (id[static_cast<std::size_t>(r)] < 0) id[static_cast<std::size_t>(r)] = g.vertices++;
  }
  g.vertices += d.free_loops();
  // The trace of a crossing joins the circle through slot 0 to the one through slot 2.
  for (const auto& x : d.crossings())
    g.edges.emplace_back(id[static_cast<std::size_t>(find(x.arcs[0]))], id[static_cast<std::size_t>(find(x.arcs[2]))]);
  return g;
}

bool is_a_adequate(const Diagram& d) { return state_graph(d, all_a_state(d)).loop_edges() == 0; }
bool is_b_adequate(const Diagram& d) { return state_graph(d, all_b_state(d)).loop_edges() == 0; }
bool is_adequate(const Diagram& d) { return is_a_adequate(d) && is_b_adequate(d); }

DegreeBounds degree_bounds(const Diagram& d) {
  if (!d.is_connected()) throw DiagramError("degree bounds need a connected diagram");
  const int c = d.crossing_count();
  const int sa = state_circles(d, all_a_state(d));
  const int sb = state_circles(d, all_b_state(d));
  DegreeBounds b;
  b.M = c + 2 * sa;
  b.m = -c - 2 * sb;
  const int w = d.writhe();
  // t = A^-4 after the (-A)^(-3w) shift, with the normalized bracket range.
  b.MJ = Rational(-(b.m + 2) + 3 * w, 4);
  b.mJ = Rational(-(b.M - 2) + 3 * w, 4);
  return b;
}

const char* to_string(StateGroup g) {
  switch (g) {
    case StateGroup::S1: return "S1";
    case StateGroup::S2: return "S2";
    case StateGroup::S3: return "S3";
    case StateGroup::S4: return "S4";
    case StateGroup::SBar1: return "SBar1";
    case StateGroup::SBar2: return "SBar2";
    case StateGroup::SBar3: return "SBar3";
    case StateGroup::SBarRest: return "SBarRest";
  }
  return "?";
}

GroupSum partial_state_sum(const Diagram& d, const std::function<bool(const RegionCounts&)>& keep,
                           int max_crossings) {
  std::array<std::uint64_t, 5> mask{};
  for (int i = 0; i < d.crossing_count(); ++i) {
    int r = d.crossing(i).region;
    if (r < 0 || r > 4) throw DiagramError("crossing " + std::to_string(i) + " carries no twist-region tag");
    mask[static_cast<std::size_t>(r)] |= std::uint64_t{1} << i;
  }
  const int n = d.crossing_count();
  auto h = state_histogram(d, max_crossings, [&](std::uint64_t s) {
    RegionCounts c;
    for (std::size_t k = 0; k < 5; ++k) c[k] = std::popcount(s & mask[k]);
    return keep(c);
  });
  GroupSum out;
  for (auto v : h) out.states += v;
  out.sum = expand(h, n, histogram_width(d), 0);
  if (!out.sum.is_zero()) out.degrees = out.sum.degree_stats();
  return out;
}

GroupSum grouped_state_sum(const Diagram& d, StateGroup g, int max_crossings) {
  RegionCounts size{};
  for (const auto& x : d.crossings())
    if (x.region >= 0 && x.region < 5) ++size[static_cast<std::size_t>(x.region)];
  enum { R, S, T, U, V };
  auto full = [&](const RegionCounts& c, int k) { return c[static_cast<std::size_t>(k)] == size[static_cast<std::size_t>(k)]; };
  std::function<bool(const RegionCounts&)> keep;
  switch (g) {
    case StateGroup::S1: keep = [&](const RegionCounts& c) { return c[T] == 0 && !full(c, U) && !full(c, V); }; break;
    case StateGroup::S2: keep = [&](const RegionCounts& c) { return c[T] == 0 && full(c, U) && !full(c, V); }; break;
    case StateGroup::S3: keep = [&](const RegionCounts& c) { return c[T] == 0 && full(c, V); }; break;
    case StateGroup::S4: keep = [&](const RegionCounts& c) { return c[T] > 0; }; break;
    case StateGroup::SBar1: keep = [&](const RegionCounts& c) { return !(full(c, U) && full(c, V)); }; break;
    case StateGroup::SBar2: keep = [&](const RegionCounts& c) { return full(c, U) && full(c, V) && full(c, R) && !full(c, S); }; break;
    case StateGroup::SBar3: keep = [&](const RegionCounts& c) { return full(c, U) && full(c, V) && full(c, S); }; break;
    case StateGroup::SBarRest: keep = [&](const RegionCounts& c) { return full(c, U) && full(c, V) && !full(c, R) && !full(c, S); }; break;
  }
  return partial_state_sum(d, keep, max_crossings);
}

}  // namespace turaev
