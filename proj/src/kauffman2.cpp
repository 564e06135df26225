#include "turaev/kauffman2.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>

namespace turaev {

LaurentPoly2 kauffman_delta() {
  LaurentPoly2 d;
  d.add_term(1, -1, 1);
  d.add_term(-1, -1, 1);
  d.add_term(0, 0, -1);
  return d;
}

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

const LaurentPoly2& delta_power(unsigned k) {
  static std::vector<LaurentPoly2> cache{LaurentPoly2::constant(1)};
  while (cache.size() <= k) cache.push_back(cache.back() * kauffman_delta());
  return cache[k];
}

// Removes one kink or one over-over bigon. Returns false when there is none.
bool simplify_once(Diagram& d, int& a_exp) {
  for (int i = 0; i < d.crossing_count(); ++i) {
    const auto& k = d.crossing(i).arcs;
    for (int j = 0; j < 4; ++j) {
      if (k[static_cast<std::size_t>(j)] != k[static_cast<std::size_t>((j + 1) % 4)]) continue;
      // A loop on slots (0,1) or (2,3) is a kink of positive writhe.
      const bool positive = j % 2 == 0;
      Diagram e = d.smooth(i, positive ? Resolution::A : Resolution::B);
      d = e.with_free_loops(e.free_loops() - 1);
      a_exp += positive ? 1 : -1;
      return true;
    }
  }
  for (const auto& face : d.faces()) {
    if (face.size() != 2) continue;
    const Slot p = face[0], q = face[1];
    if (p.crossing == q.crossing) continue;
    // The edge leaving p ends at slot q.slot + 1; one strand must lie on top at both ends.
    if (p.slot % 2 != mod4(q.slot + 1) % 2) continue;
    d = d.remove_crossings({p.crossing, q.crossing});
    return true;
  }
  return false;
}

struct Traversal {
  std::vector<int> bad;  // crossings first met from below, in traversal order
};

// Picks base points, directions and a component order with few crossings first
// met from below; switching those crossings makes the diagram descending.
Traversal plan_descending(const Diagram& d) {
  const auto& comps = d.passages();
  const std::size_t k = comps.size();
  std::vector<std::vector<Passage>> seqs(k);
  for (std::size_t ci = 0; ci < k; ++ci) {
    const auto& seq = comps[ci];
    const std::size_t m = seq.size();
    int best = -1;
    for (int dir = 0; dir < 2; ++dir)
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<Passage> cand;
        cand.reserve(m);
        for (std::size_t t = 0; t < m; ++t) cand.push_back(dir == 0 ? seq[(j + t) % m] : seq[(j + m - t) % m]);
        std::vector<char> seen(static_cast<std::size_t>(d.crossing_count()), 0);
        int bad = 0;
        for (const auto& p : cand) {
          auto& s = seen[static_cast<std::size_t>(p.crossing)];
          if (!s && p.is_under()) {
            // Only self-crossings count here; others are met once in this component.
            int count = 0;
            for (const auto& q : cand) count += q.crossing == p.crossing;
            if (count == 2) ++bad;
          }
          s = 1;
        }
        if (best < 0 || bad < best) {
          best = bad;
          seqs[ci] = std::move(cand);
        }
      }
  }
  // Order components so that upper ones come first.
  std::vector<int> comp_under(static_cast<std::size_t>(d.crossing_count()), -1);
  for (std::size_t ci = 0; ci < k; ++ci)
    for (const auto& p : seqs[ci])
      if (p.is_under()) comp_under[static_cast<std::size_t>(p.crossing)] = static_cast<int>(ci);
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  auto inter_bad = [&](const std::vector<int>& ord) {
    std::vector<int> rank(k);
    for (std::size_t i = 0; i < k; ++i) rank[static_cast<std::size_t>(ord[i])] = static_cast<int>(i);
    int bad = 0;
    for (std::size_t ci = 0; ci < k; ++ci)
      for (const auto& p : seqs[ci]) {
        if (p.is_under()) continue;
        int lower = comp_under[static_cast<std::size_t>(p.crossing)];
        if (lower != static_cast<int>(ci) && rank[static_cast<std::size_t>(lower)] < rank[ci]) ++bad;
      }
    return bad;
  };
  if (k <= 6) {
    std::vector<int> best = order;
    int best_bad = inter_bad(order);
    while (std::next_permutation(order.begin(), order.end())) {
      int b = inter_bad(order);
      if (b < best_bad) {
        best_bad = b;
        best = order;
      }
    }
    order = best;
  }
  Traversal t;
  std::vector<char> seen(static_cast<std::size_t>(d.crossing_count()), 0);
  for (int ci : order)
    for (const auto& p : seqs[static_cast<std::size_t>(ci)]) {
      auto& s = seen[static_cast<std::size_t>(p.crossing)];
      if (!s && p.is_under()) t.bad.push_back(p.crossing);
      s = 1;
    }
  return t;
}

}  // namespace

std::vector<int> canonical_code(const Diagram& d) {
  const int n = d.crossing_count();
  std::vector<int> best;
  for (int c0 = 0; c0 < n; ++c0)
    for (int s0 = 0; s0 < 4; ++s0) {
      std::vector<int> label(static_cast<std::size_t>(n), -1), base(static_cast<std::size_t>(n), 0), order;
      order.reserve(static_cast<std::size_t>(n));
      label[static_cast<std::size_t>(c0)] = 0;
      base[static_cast<std::size_t>(c0)] = s0;
      order.push_back(c0);
      std::vector<int> code;
      code.reserve(static_cast<std::size_t>(9 * n + 1));
      bool worse = false;
      for (std::size_t idx = 0; idx < order.size() && !worse; ++idx) {
        const int c = order[idx];
        const int b = base[static_cast<std::size_t>(c)];
        code.push_back(b % 2);
        for (int j = 0; j < 4; ++j) {
          Slot m = d.mate({c, mod4(b + j)});
          auto& l = label[static_cast<std::size_t>(m.crossing)];
          if (l < 0) {
            l = static_cast<int>(order.size());
            base[static_cast<std::size_t>(m.crossing)] = m.slot;
            order.push_back(m.crossing);
          }
          code.push_back(l);
          code.push_back(mod4(m.slot - base[static_cast<std::size_t>(m.crossing)]));
        }
        // Prune once this prefix is already larger than the best code.
        if (!best.empty()) {
          auto cmp = std::lexicographical_compare_three_way(code.begin(), code.end(), best.begin(),
                                                            best.begin() + static_cast<std::ptrdiff_t>(std::min(code.size(), best.size())));
          if (cmp > 0) worse = true;
        }
      }
      if (worse) continue;
      if (best.empty() || code < best) best = std::move(code);
    }
  best.push_back(-1 - d.free_loops());
  return best;
}

LaurentPoly2 KauffmanEvaluator::lambda(const Diagram& input) {
  Diagram d = input;
  int a_exp = 0;
  while (simplify_once(d, a_exp)) {
  }
  LaurentPoly2 result;
  if (d.crossing_count() == 0) {
    result = delta_power(static_cast<unsigned>(std::max(0, d.free_loops() - 1)));
  } else {
    auto parts = d.pieces();
    if (parts.size() == 1) {
      result = lambda_connected(d);
    } else {
      result = delta_power(static_cast<unsigned>(parts.size() - 1));
      for (const auto& p : parts) result *= lambda(p);
    }
  }
  return result.shifted(a_exp, 0);
}

LaurentPoly2 KauffmanEvaluator::lambda_connected(const Diagram& d) {
  auto key = canonical_code(d);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (memo_.size() >= max_nodes_)
    throw BudgetError("skein recursion exceeded " + std::to_string(max_nodes_) + " memo entries");
  LaurentPoly2 v = lambda_descending(d);
  memo_.emplace(std::move(key), v);
  return v;
}

// Switching the planned crossings one at a time and applying the skein
// relation at each gives
//   Lambda(D) = sum_k (-1)^(k-1) z (Lambda(A_k) + Lambda(B_k)) + (-1)^m Lambda(D_m),
// where A_k, B_k smooth crossing k in D_(k-1) and D_m is descending.
LaurentPoly2 KauffmanEvaluator::lambda_descending(const Diagram& d) {
  const auto plan = plan_descending(d);
  LaurentPoly2 result;
  Diagram cur = d;
  int sign = 1;
  const LaurentPoly2 z = LaurentPoly2::monomial(1, 0, 1);
  for (int x : plan.bad) {
    LaurentPoly2 term = lambda(cur.smooth(x, Resolution::A));
    term += lambda(cur.smooth(x, Resolution::B));
    term *= z;
    if (sign < 0) term = -term;
    result += term;
    sign = -sign;
    cur = cur.switch_crossing(x);
  }
  // A descending diagram is an unlink; its kinks and self-crossings give a^w.
  LaurentPoly2 base = delta_power(static_cast<unsigned>(cur.component_count() - 1)).shifted(cur.writhe(), 0);
  if (sign < 0) base = -base;
  result += base;
  return result;
}

LaurentPoly2 kauffman_lambda(const Diagram& d, std::uint64_t max_nodes) {
  KauffmanEvaluator ev(max_nodes);
  return ev.lambda(d);
}

LaurentPoly2 f_from_lambda(const LaurentPoly2& lambda, int writhe) { return lambda.shifted(-writhe, 0); }

LaurentPoly2 kauffman_f(const Diagram& d, std::uint64_t max_nodes) {
  return f_from_lambda(kauffman_lambda(d, max_nodes), d.writhe());
}

int z_degree(const LaurentPoly2& p) { return p.z_degree(); }

int longest_bridge(const Diagram& d) {
  int best = 0;
  for (const auto& comp : d.passages()) {
    const std::size_t m = comp.size();
    std::size_t start = m;
    for (std::size_t i = 0; i < m; ++i)
      if (comp[i].is_under()) {
        start = i;
        break;
      }
    if (start == m) {
      best = std::max(best, static_cast<int>(m));
      continue;
    }
    int run = 0;
    for (std::size_t t = 1; t <= m; ++t) {
      if (comp[(start + t) % m].is_under()) {
        run = 0;
      } else {
        best = std::max(best, ++run);
      }
    }
  }
  return best;
}

std::vector<Diagram> connected_sum_factors(const Diagram& d) {
  const int n = d.crossing_count();
  if (n < 2 || !d.is_connected()) return {d};
  const auto faces = d.faces();
  std::map<Slot, int> face_of;
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (const auto& s : faces[f]) face_of[s] = static_cast<int>(f);
  std::map<std::pair<int, int>, std::vector<int>> arcs_between;
  for (int a = 0; a < d.arc_count(); ++a) {
    int f = face_of.at(d.arc_tail(a)), g = face_of.at(d.arc_head(a));
    if (f == g) continue;
    arcs_between[{std::min(f, g), std::max(f, g)}].push_back(a);
  }
  auto reach = [&](int from, int skip1, int skip2) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(from);
    seen[static_cast<std::size_t>(from)] = 1;
    while (!q.empty()) {
      int c = q.front();
      q.pop();
      for (int a = 0; a < d.arc_count(); ++a) {
        if (a == skip1 || a == skip2) continue;
        int x = d.arc_tail(a).crossing, y = d.arc_head(a).crossing;
        if (x != c && y != c) continue;
        int o = x == c ? y : x;
        if (!seen[static_cast<std::size_t>(o)]) {
          seen[static_cast<std::size_t>(o)] = 1;
          q.push(o);
        }
      }
    }
    return seen;
  };
  for (const auto& [faces_pair, arcs] : arcs_between)
    for (std::size_t i = 0; i < arcs.size(); ++i)
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        const int e1 = arcs[i], e2 = arcs[j];
        auto side = reach(d.arc_tail(e1).crossing, e1, e2);
        if (std::all_of(side.begin(), side.end(), [](char c) { return c != 0; })) continue;
        std::vector<RawCrossing> part[2];
        for (int c = 0; c < n; ++c) {
          const auto& x = d.crossing(c);
          part[side[static_cast<std::size_t>(c)] ? 0 : 1].push_back(RawCrossing{x.arcs, x.region, x.sign > 0 ? 3 : 1});
        }
        std::vector<Diagram> out;
        for (auto& p : part) {
          auto sub = connected_sum_factors(Diagram::from_raw(p, 0, {{e1, e2}}));
          out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
      }
  return {d};
}

std::vector<int> factor_bridges(const Diagram& d) {
  std::vector<int> out;
  for (const auto& piece : d.pieces())
    for (const auto& f : connected_sum_factors(piece))
      if (f.crossing_count() > 0) out.push_back(longest_bridge(f));
  return out;
}

BoundsCheck thistlethwaite_check(const Diagram& d, const LaurentPoly2& lambda) {
  BoundsCheck b;
  b.n = d.crossing_count();
  for (int x : factor_bridges(d)) b.bridge_sum += x;
  for (const auto& [key, c] : lambda.terms()) {
    const auto [r, s] = key;
    if (std::abs(r) + s > b.n || s > b.n - b.bridge_sum) {
      b.ok = false;
      b.violations.emplace_back(r, s);
    }
  }
  return b;
}

KauffmanReport kauffman_report(const Diagram& d, std::uint64_t max_nodes) {
  KauffmanReport r;
  r.lambda = kauffman_lambda(d, max_nodes);
  r.f = f_from_lambda(r.lambda, d.writhe());
  r.z_degree = r.lambda.z_degree();
  r.longest_bridges = factor_bridges(d);
  r.bounds = thistlethwaite_check(d, r.lambda);
  return r;
}

nlohmann::json to_json(const KauffmanReport& r) {
  nlohmann::json j;
  j["lambda"] = r.lambda.to_string();
  j["lambda_terms"] = r.lambda.to_json();
  j["f"] = r.f.to_string();
  j["f_terms"] = r.f.to_json();
  j["z_degree"] = r.z_degree;
  j["longest_bridges"] = r.longest_bridges;
  nlohmann::json b;
  b["ok"] = r.bounds.ok;
  b["n"] = r.bounds.n;
  b["bridge_sum"] = r.bounds.bridge_sum;
  b["violations"] = nlohmann::json::array();
  for (auto [a, z] : r.bounds.violations) b["violations"].push_back({a, z});
  j["bounds_check"] = b;
  return j;
}

}  // namespace turaev
