#pragma once

// Randomized agreement checks between the fast paths and the brute-force
// oracles, plus the seeded instance generators they share with the test
// suite.  Every generator draws raw engine words (never std::distributions),
// so a seed reproduces the same instances on any platform.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chordal.hpp"
#include "graph.hpp"
#include "interval.hpp"
#include "oracle.hpp"
#include "pq_tree.hpp"
#include "rational.hpp"
#include "reorder.hpp"
#include "repext.hpp"
#include "simrep.hpp"

namespace irex::selfcheck {

using Rng = std::mt19937;

inline int rnd(Rng& rng, int bound) {  // uniform-ish over [0, bound)
  return bound <= 0 ? 0 : int(rng() % std::uint32_t(bound));
}

inline Graph random_graph(Rng& rng, int n, int prob_pct) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rnd(rng, 100) < prob_pct) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline PredrawnMap random_predrawn(Rng& rng, int n, int max_count, int max_coord) {
  PredrawnMap pre(n);
  int want = rnd(rng, max_count + 1);
  for (int t = 0; t < want; ++t) {
    int v = rnd(rng, n);
    if (pre[v]) continue;
    int l = rnd(rng, max_coord + 1);
    int r = l + rnd(rng, max_coord - l + 1);
    pre[v] = ClosedInterval(Rational(l), Rational(r));
  }
  return pre;
}

// Random interval graph with its generating representation.  Integer
// endpoints over a span proportional to n keep the expected density low; the
// span doubles until the graph has at most max_m edges.
struct IntervalInstance {
  Graph g;
  Representation rep;
};

inline IntervalInstance random_interval_graph(Rng& rng, int n, std::size_t max_m) {
  for (int span = 4 * n;; span *= 2) {
    Representation rep;
    rep.reserve(n);
    for (int v = 0; v < n; ++v) {
      int l = rnd(rng, span);
      rep.push_back(ClosedInterval(Rational(l), Rational(l + 1 + rnd(rng, 8))));
    }
    Graph g = intersection_graph(rep);
    if (g.m() <= max_m) return {std::move(g), std::move(rep)};
  }
}

inline PredrawnMap every_tenth_predrawn(const Representation& rep) {
  PredrawnMap pre(rep.size());
  for (std::size_t v = 0; v < rep.size(); v += 10) pre[v] = rep[v];
  return pre;
}

// Random PQ-tree over n elements, built through its bracket form.
inline PQTree random_pq_tree(Rng& rng, int n) {
  std::vector<int> elems(n);
  for (int i = 0; i < n; ++i) elems[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(elems[i], elems[rnd(rng, i + 1)]);
  std::string text;
  auto build = [&](auto&& self, int lo, int hi) -> void {  // [lo, hi)
    if (hi - lo == 1) {
      text += std::to_string(elems[lo]);
      return;
    }
    int groups = 2 + rnd(rng, std::min(3, hi - lo - 1));
    std::vector<int> cuts{lo};
    while (int(cuts.size()) < groups) {
      int c = lo + 1 + rnd(rng, hi - lo - 1);
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    bool q = rnd(rng, 2) == 0;
    text += q ? '[' : '(';
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      if (i) text += ' ';
      self(self, cuts[i], cuts[i + 1]);
    }
    text += q ? ']' : ')';
  };
  if (n == 0)
    text = "()";
  else
    build(build, 0, n);
  auto t = PQTree::from_bracket(text);
  if (!t) throw std::logic_error("random_pq_tree built an invalid bracket");
  return std::move(*t);
}

inline std::vector<std::optional<std::pair<Extended, Extended>>> random_regions(
    Rng& rng, int n, int max_coord) {
  std::vector<std::optional<std::pair<Extended, Extended>>> regions(n);
  for (int i = 0; i < n; ++i) {
    if (rnd(rng, 3) == 0) continue;  // unconstrained
    int l = rnd(rng, max_coord + 1);
    int r = l + rnd(rng, max_coord - l + 1);
    regions[i] = std::make_pair(Extended(Rational(l)), Extended(Rational(r)));
  }
  return regions;
}

inline std::string describe_graph(const Graph& g) { return format_graph(g); }

inline std::string describe_partial(const PredrawnMap& pre) {
  std::string s;
  for (std::size_t v = 0; v < pre.size(); ++v)
    if (pre[v])
      s += std::to_string(v) + " " + pre[v]->left.str() + " " +
           pre[v]->right.str() + "\n";
  return s.empty() ? "(nothing pre-drawn)\n" : s;
}

// ---- agreement runners ----------------------------------------------------
// Each runner returns a failure description for the first disagreement, or
// nullopt after `iters` clean instances.  `inject_fault` deliberately breaks
// the recognition comparison so the harness itself can be tested.

inline std::optional<std::string> check_recognize(std::uint32_t seed, int iters,
                                                  bool inject_fault = false) {
  Rng rng(seed);
  const int probs[3] = {20, 50, 80};
  for (int it = 0; it < iters; ++it) {
    Graph g = random_graph(rng, 1 + rnd(rng, 8), probs[rnd(rng, 3)]);
    bool fast = recognize(g).extended;
    bool slow = oracle::brute_interval(g);
    if (inject_fault && g.n() >= 3) slow = !slow;
    if (fast != slow)
      return "recognize disagreement (fast=" + std::to_string(fast) +
             " oracle=" + std::to_string(slow) + ") on:\n" + describe_graph(g);
    if (fast) {
      auto res = recognize(g);
      auto chk = verify_extension(g, PredrawnMap(g.n()), res.rep);
      if (!chk.ok)
        return "recognize produced a bad representation (" + chk.reason +
               ") on:\n" + describe_graph(g);
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> check_consecutive(std::uint32_t seed, int iters) {
  Rng rng(seed);
  for (int it = 0; it < iters; ++it) {
    int n = 1 + rnd(rng, 7);
    int k = rnd(rng, 5);
    std::vector<std::vector<int>> sets(k);
    for (auto& s : sets) {
      for (int e = 0; e < n; ++e)
        if (rnd(rng, 2)) s.push_back(e);
    }
    PQTree t = PQTree::universal(n);
    bool feasible = true;
    for (const auto& s : sets)
      if (!t.reduce(s)) {
        feasible = false;
        break;
      }
    auto brute = oracle::brute_consecutive(n, sets);
    std::string inst = "n=" + std::to_string(n);
    for (const auto& s : sets) {
      inst += " set={";
      for (int e : s) inst += std::to_string(e) + " ";
      inst += "}";
    }
    if (!feasible) {
      if (!brute.empty())
        return "pq-tree says infeasible but " + std::to_string(brute.size()) +
               " orderings exist: " + inst;
      continue;
    }
    auto fast = t.enumerate_orderings(50000);
    if (!fast) return "enumeration limit hit unexpectedly: " + inst;
    std::set<std::vector<int>> fastset(fast->begin(), fast->end());
    if (fastset != brute)
      return "ordering sets differ (fast " + std::to_string(fastset.size()) +
             " vs oracle " + std::to_string(brute.size()) + "): " + inst;
  }
  return std::nullopt;
}

inline std::optional<std::string> check_reorder(std::uint32_t seed, int iters) {
  Rng rng(seed);
  for (int it = 0; it < iters; ++it) {
    int n = 1 + rnd(rng, 7);
    PQTree base = random_pq_tree(rng, n);
    auto regions = random_regions(rng, n, 6);
    auto seq = SortedEndpointSequence::from_regions(regions);

    auto orderings = base.enumerate_orderings(50000);
    if (!orderings) return "enumeration limit hit in reorder check";
    auto compatible = [&](const std::vector<int>& ord) {
      std::vector<int> at(n);
      for (int i = 0; i < n; ++i) at[ord[i]] = i;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (a != b && seq.precedes(a, b) && at[a] > at[b]) return false;
      return true;
    };
    bool any = false;
    for (const auto& ord : *orderings)
      if (compatible(ord)) {
        any = true;
        break;
      }

    PQTree fast = base;
    auto status = reorder_interval(fast, seq);
    std::string inst = "tree=" + base.to_bracket();
    for (int i = 0; i < n; ++i)
      if (regions[i])
        inst += " r" + std::to_string(i) + "=[" + regions[i]->first.str() +
                "," + regions[i]->second.str() + "]";
    if ((status == ReorderStatus::Reordered) != any)
      return "reorder_interval status wrong (fast=" +
             std::to_string(status == ReorderStatus::Reordered) +
             " oracle=" + std::to_string(any) + "): " + inst;
    if (status == ReorderStatus::Reordered) {
      auto front = fast.frontier();
      if (!compatible(front))
        return "reorder_interval frontier violates the relation: " + inst;
      if (!base.admits(front))
        return "reorder_interval left the equivalence class: " + inst;
    }

    // The general algorithm fed the explicit pair set must behave alike.
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && seq.precedes(a, b)) pairs.emplace_back(a, b);
    PQTree gen = base;
    auto gstatus = reorder_general(gen, pairs);
    if (gstatus != status)
      return "reorder_general status differs from reorder_interval: " + inst;
    if (status == ReorderStatus::Reordered && gen.frontier() != fast.frontier())
      return "reorder_general picked a different frontier: " + inst;
  }
  return std::nullopt;
}

inline std::optional<std::string> check_handles(std::uint32_t seed, int iters) {
  Rng rng(seed);
  for (int it = 0; it < iters; ++it) {
    int t = 2 + rnd(rng, 5);
    std::vector<std::vector<int>> family(t);
    int total = 0;
    for (auto& members : family) {
      int sz = 1 + rnd(rng, 3);
      for (int s = 0; s < sz; ++s) members.push_back(total++);
    }
    std::vector<std::optional<std::pair<Extended, Extended>>> regions(total);
    for (int e = 0; e < total; ++e) {
      int l = rnd(rng, 7);
      int r = l + rnd(rng, 7 - l);
      regions[e] = std::make_pair(Extended(Rational(l)), Extended(Rational(r)));
    }
    auto seq = SortedEndpointSequence::from_regions(regions);
    std::vector<Handles> hs(t);
    for (int i = 0; i < t; ++i)
      for (int e : family[i]) {
        hs[i].lower = std::min(hs[i].lower, seq.right_pos[e]);
        hs[i].upper = std::max(hs[i].upper, seq.left_pos[e]);
      }
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) {
        if (i == j) continue;
        bool brute = false;
        for (int a : family[i])
          for (int b : family[j])
            if (seq.precedes(a, b)) brute = true;
        if (set_precedes(hs[i], hs[j]) != brute)
          return "set_precedes disagreement between families " +
                 std::to_string(i) + " and " + std::to_string(j);
      }
  }
  return std::nullopt;
}

inline std::optional<std::string> check_extend(std::uint32_t seed, int iters) {
  Rng rng(seed);
  const int probs[3] = {20, 50, 80};
  for (int it = 0; it < iters; ++it) {
    int n = 1 + rnd(rng, 7);
    Graph g = random_graph(rng, n, probs[rnd(rng, 3)]);
    PredrawnMap pre = random_predrawn(rng, n, 3, 6);
    auto res = extend(g, pre);
    bool slow = oracle::brute_extend(g, pre);
    if (res.extended != slow)
      return "extend disagreement (fast=" + std::to_string(res.extended) +
             " oracle=" + std::to_string(slow) + ") on:\n" + describe_graph(g) +
             "partial:\n" + describe_partial(pre);
    if (res.extended) {
      auto chk = verify_extension(g, pre, res.rep);
      if (!chk.ok)
        return "extend produced a bad representation (" + chk.reason +
               ") on:\n" + describe_graph(g) + "partial:\n" + describe_partial(pre);
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> check_simrep(std::uint32_t seed, int iters) {
  Rng rng(seed);
  for (int it = 0; it < iters; ++it) {
    int l = rnd(rng, 4);
    int k = 1 + rnd(rng, 3);
    std::vector<std::pair<int, int>> shared_edges;
    for (int a = 0; a < l; ++a)
      for (int b = a + 1; b < l; ++b)
        if (rnd(rng, 2)) shared_edges.emplace_back(a, b);
    SimRepInstance inst;
    for (int gi = 0; gi < k; ++gi) {
      int n = l + rnd(rng, std::max(1, 7 - l));
      if (n == 0) n = 1;
      auto edges = shared_edges;
      for (int u = 0; u < n; ++u)
        for (int v = std::max(u + 1, l); v < n; ++v)
          if (rnd(rng, 2)) edges.emplace_back(u, v);
      inst.graphs.push_back(Graph::from_edges(n, edges));
      std::vector<int> ids(l);
      for (int j = 0; j < l; ++j) ids[j] = j;
      inst.shared_ids.push_back(std::move(ids));
    }
    for (int j = 0; j < l; ++j) inst.names.push_back("s" + std::to_string(j));

    auto res = simrep(inst);
    if (res.status == SimRepStatus::InvalidInstance ||
        res.status == SimRepStatus::BoundExceeded)
      return "simrep rejected a generated instance: " + res.reason;
    bool slow = oracle::brute_simrep(inst.graphs, inst.shared_ids);
    bool fast = res.status == SimRepStatus::Solved;
    std::string desc;
    for (const auto& g : inst.graphs) desc += describe_graph(g);
    if (fast != slow)
      return "simrep disagreement (fast=" + std::to_string(fast) +
             " oracle=" + std::to_string(slow) + ") on l=" + std::to_string(l) +
             ":\n" + desc;
    if (fast) {
      for (int gi = 0; gi < k; ++gi) {
        PredrawnMap pre(inst.graphs[gi].n());
        for (int j = 0; j < l; ++j)
          pre[inst.shared_ids[gi][j]] = res.shared_rep[j];
        auto chk = verify_extension(inst.graphs[gi], pre, res.reps[gi]);
        if (!chk.ok)
          return "simrep representation " + std::to_string(gi) + " is bad (" +
                 chk.reason + ") on:\n" + desc;
      }
    }
  }
  return std::nullopt;
}

struct CheckReport {
  std::string name;
  std::optional<std::string> failure;
};

inline std::vector<CheckReport> run_selfchecks(std::uint32_t seed, int iters,
                                               bool inject_fault = false) {
  std::vector<CheckReport> out;
  out.push_back({"recognize-vs-oracle", check_recognize(seed, iters, inject_fault)});
  out.push_back({"pq-orderings-vs-oracle", check_consecutive(seed + 1, iters)});
  out.push_back({"reorder-vs-oracle", check_reorder(seed + 2, iters)});
  out.push_back({"handles-vs-oracle", check_handles(seed + 3, iters)});
  out.push_back({"extend-vs-oracle", check_extend(seed + 4, iters)});
  out.push_back({"simrep-vs-oracle", check_simrep(seed + 5, iters)});
  return out;
}

}  // namespace irex::selfcheck
