#pragma once
// Reordering a PQ-tree to respect element precedences.
//
// Both entry points take a valid PQ-tree and rearrange children (permuting
// P-nodes, possibly reversing Q-nodes) so that the frontier lists elements
// consistently with the given constraints, or report Incompatible. Every
// rearrangement is equivalence-preserving, so the tree stays usable even
// after an Incompatible answer.
//
// reorder_general accepts arbitrary strict precedence pairs and works by
// contracting subtrees bottom-up with a union-find, keeping per-component
// outgoing arc lists (merged small-to-large) and consuming an arc at the
// node where both endpoints' subtrees meet.
//
// reorder_interval is the near-linearithmic specialization for precedences
// induced by regions on the line: a must precede b exactly when a's region
// ends no later than b's region begins. Each subtree is summarized by two
// handles into the sorted endpoint sequence, and P-node children are emitted
// in Kahn order maintained incrementally via the two leftmost alive lower
// handles.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "irex/pq_tree.hpp"
#include "irex/rational.hpp"

namespace irex {

enum class ReorderStatus { Reordered, Incompatible };

// ---- interval-order constraint encoding ----------------------------------

// Positions of region endpoints in a single sorted event sequence. At equal
// coordinates, right endpoints come first: touching regions still force an
// order, and two single-point regions at the same coordinate force a cycle.
struct SortedEndpointSequence {
  int num_elements = 0;
  std::vector<int> left_pos;   // -1 when the element is unconstrained
  std::vector<int> right_pos;

  static SortedEndpointSequence from_regions(
      const std::vector<std::optional<std::pair<Extended, Extended>>>& regions) {
    SortedEndpointSequence s;
    s.num_elements = int(regions.size());
    s.left_pos.assign(regions.size(), -1);
    s.right_pos.assign(regions.size(), -1);
    struct Ev {
      Extended coord;
      bool is_left;
      int elem;
    };
    std::vector<Ev> evs;
    for (int e = 0; e < int(regions.size()); ++e) {
      if (!regions[e]) continue;
      const auto& [lo, hi] = *regions[e];
      if (hi < lo) throw std::invalid_argument("from_regions: empty region");
      evs.push_back({lo, true, e});
      evs.push_back({hi, false, e});
    }
    std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) {
      if (a.coord != b.coord) return a.coord < b.coord;
      if (a.is_left != b.is_left) return !a.is_left;  // rights first
      return a.elem < b.elem;
    });
    for (int i = 0; i < int(evs.size()); ++i) {
      if (evs[i].is_left)
        s.left_pos[evs[i].elem] = i;
      else
        s.right_pos[evs[i].elem] = i;
    }
    return s;
  }

  bool constrained(int e) const { return left_pos[e] != -1; }

  // a's region ends no later than b's begins: a must come first.
  bool precedes(int a, int b) const {
    return constrained(a) && constrained(b) && right_pos[a] < left_pos[b];
  }
};

// Subtree summary: `lower` is the earliest right-event position below, the
// point from which this subtree starts forcing others; `upper` is the latest
// left-event position below, until which this subtree can still be forced.
struct Handles {
  int lower = INT_MAX;
  int upper = INT_MIN;
};

// I must precede J: some element of I ends before some element of J begins.
inline bool set_precedes(const Handles& i, const Handles& j) { return i.lower < j.upper; }

// Handles for every live node id, computed bottom-up.
inline std::vector<Handles> compute_handles(const PQTree& t, const SortedEndpointSequence& seq) {
  std::vector<Handles> h(t.arena_size());
  if (t.root() == -1) return h;
  std::vector<int> stack{t.root()}, order;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int c = t.first_child(v); c != -1; c = t.next_sibling(c)) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (t.type(v) == PQTree::Type::Leaf) {
      int e = t.leaf_element(v);
      if (seq.constrained(e)) h[v] = {seq.right_pos[e], seq.left_pos[e]};
      continue;
    }
    Handles agg;
    for (int c = t.first_child(v); c != -1; c = t.next_sibling(c)) {
      agg.lower = std::min(agg.lower, h[c].lower);
      agg.upper = std::max(agg.upper, h[c].upper);
    }
    h[v] = agg;
  }
  return h;
}

// Indices of handle sets not forced after by any other: J is minimal when no
// other I has I.lower < J.upper, tested against the two smallest lowers.
inline std::vector<int> minimal_elements(const std::vector<Handles>& hs) {
  std::vector<int> out;
  if (hs.empty()) return out;
  int p1 = 0;
  for (int i = 1; i < int(hs.size()); ++i)
    if (hs[i].lower < hs[p1].lower) p1 = i;
  int p2_lower = INT_MAX;
  for (int i = 0; i < int(hs.size()); ++i)
    if (i != p1) p2_lower = std::min(p2_lower, hs[i].lower);
  for (int i = 0; i < int(hs.size()); ++i) {
    int bar = i == p1 ? p2_lower : hs[p1].lower;
    if (hs[i].upper < bar) out.push_back(i);
  }
  return out;
}

namespace detail {

// Kahn order of a P-node's children under the handle-induced relation,
// maintained via the two leftmost alive lower handles. Children are emitted
// lowest-index-first among the currently minimal ones. Returns nullopt on a
// precedence cycle.
inline std::optional<std::vector<int>> order_p_children(const std::vector<Handles>& hs) {
  const int k = int(hs.size());
  struct Ev {
    int pos;
    int child;
    bool lower;
  };
  std::vector<Ev> ev;
  ev.reserve(2 * k);
  std::vector<int> upper_idx(k), lower_idx(k);
  for (int i = 0; i < k; ++i) {
    ev.push_back({hs[i].lower, i, true});
    ev.push_back({hs[i].upper, i, false});
  }
  std::sort(ev.begin(), ev.end(), [](const Ev& a, const Ev& b) {
    if (a.pos != b.pos) return a.pos < b.pos;
    if (a.lower != b.lower) return !a.lower;
    return a.child < b.child;
  });
  for (int i = 0; i < int(ev.size()); ++i)
    (ev[i].lower ? lower_idx : upper_idx)[ev[i].child] = i;

  std::vector<char> alive(k, 1);
  std::set<int> candidates;
  const int end = int(ev.size());
  // advance to the next alive lower entry, collecting the uppers passed
  auto advance = [&](int idx, bool collect) {
    while (idx < end && !(ev[idx].lower && alive[ev[idx].child])) {
      if (collect && !ev[idx].lower && alive[ev[idx].child]) candidates.insert(ev[idx].child);
      ++idx;
    }
    return idx;
  };
  int p1 = advance(0, true);
  int p2 = advance(p1 + 1, false);
  auto recheck_p1_owner = [&] {
    if (p1 >= end) return;
    int c = ev[p1].child;
    if (alive[c] && upper_idx[c] < p2) candidates.insert(c);
  };
  recheck_p1_owner();

  std::vector<int> order;
  order.reserve(k);
  for (int step = 0; step < k; ++step) {
    if (candidates.empty()) return std::nullopt;
    int j = *candidates.begin();
    candidates.erase(candidates.begin());
    alive[j] = 0;
    order.push_back(j);
    if (p1 < end && ev[p1].child == j) {
      p1 = advance(p1, true);
      p2 = advance(std::max(p2, p1 + 1), false);
      recheck_p1_owner();
    } else if (p2 < end && ev[p2].child == j) {
      p2 = advance(p2, false);
      recheck_p1_owner();
    }
  }
  return order;
}

// Does the child sequence admit its current direction? A violation is a
// later child that must precede an earlier one.
inline bool q_direction_ok(const std::vector<Handles>& hs) {
  int suffix_min = INT_MAX;
  for (int i = int(hs.size()) - 1; i >= 0; --i) {
    if (suffix_min < hs[i].upper) return false;
    suffix_min = std::min(suffix_min, hs[i].lower);
  }
  return true;
}

inline std::vector<int> postorder_nodes(const PQTree& t) {
  std::vector<int> stack, order;
  if (t.root() != -1) stack.push_back(t.root());
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int c = t.first_child(v); c != -1; c = t.next_sibling(c)) stack.push_back(c);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace detail

// Rearranges t so its frontier respects every region-induced precedence.
inline ReorderStatus reorder_interval(PQTree& t, const SortedEndpointSequence& seq) {
  if (!t.valid()) throw std::logic_error("reorder_interval: invalid tree");
  if (seq.num_elements != t.n())
    throw std::invalid_argument("reorder_interval: element count mismatch");
  auto handles = compute_handles(t, seq);
  for (int v : detail::postorder_nodes(t)) {
    if (t.type(v) == PQTree::Type::Leaf) continue;
    auto kids = t.children(v);
    std::vector<Handles> hs(kids.size());
    for (std::size_t i = 0; i < kids.size(); ++i) hs[i] = handles[kids[i]];
    if (t.type(v) == PQTree::Type::P) {
      auto order = detail::order_p_children(hs);
      if (!order) return ReorderStatus::Incompatible;
      std::vector<int> arranged;
      arranged.reserve(kids.size());
      for (int idx : *order) arranged.push_back(kids[idx]);
      t.set_children_order(v, arranged);
    } else {
      if (detail::q_direction_ok(hs)) continue;
      std::reverse(hs.begin(), hs.end());
      if (!detail::q_direction_ok(hs)) return ReorderStatus::Incompatible;
      t.reverse_children(v);
    }
  }
  return ReorderStatus::Reordered;
}

// Rearranges t so its frontier places a before b for every pair (a,b).
// Pairs with a == b are vacuous and ignored.
inline ReorderStatus reorder_general(PQTree& t,
                                     const std::vector<std::pair<int, int>>& before) {
  if (!t.valid()) throw std::logic_error("reorder_general: invalid tree");
  const int n = t.n();
  for (auto [a, b] : before)
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("reorder_general: element out of range");

  // Union-find over elements; components mirror already-processed subtrees.
  std::vector<int> uf_parent(n), uf_size(n, 1);
  for (int i = 0; i < n; ++i) uf_parent[i] = i;
  auto find = [&](int x) {
    while (uf_parent[x] != x) {
      uf_parent[x] = uf_parent[uf_parent[x]];
      x = uf_parent[x];
    }
    return x;
  };

  std::vector<std::vector<int>> out_arcs(n);
  for (auto [a, b] : before)
    if (a != b) out_arcs[a].push_back(b);

  // child_slot[rep] = index of the child (this node's) whose subtree is rep,
  // valid when slot_stamp matches the node being processed.
  std::vector<int> child_slot(n, -1);
  std::vector<int> slot_stamp(n, -1);
  std::vector<int> sub_elem;  // any element inside each node's subtree
  int stamp = 0;

  auto post = detail::postorder_nodes(t);
  sub_elem.assign(t.arena_size(), -1);

  for (int v : post) {
    if (t.type(v) == PQTree::Type::Leaf) {
      sub_elem[v] = t.leaf_element(v);
      continue;
    }
    auto kids = t.children(v);
    const int k = int(kids.size());
    sub_elem[v] = sub_elem[kids[0]];
    ++stamp;
    std::vector<int> reps(k);
    for (int i = 0; i < k; ++i) {
      reps[i] = find(sub_elem[kids[i]]);
      child_slot[reps[i]] = i;
      slot_stamp[reps[i]] = stamp;
    }
    // Arcs between two children of v are decided here and dropped; arcs
    // leaving v's subtree are kept for an ancestor.
    std::vector<std::vector<int>> adj(k);
    std::vector<int> indeg(k, 0);
    for (int i = 0; i < k; ++i) {
      auto& arcs = out_arcs[reps[i]];
      std::size_t w = 0;
      for (std::size_t r = 0; r < arcs.size(); ++r) {
        int tr = find(arcs[r]);
        if (tr == reps[i]) continue;  // settled lower down
        if (slot_stamp[tr] == stamp) {
          int j = child_slot[tr];
          adj[i].push_back(j);
          ++indeg[j];
        } else {
          arcs[w++] = arcs[r];
        }
      }
      arcs.resize(w);
    }

    if (t.type(v) == PQTree::Type::P) {
      std::set<int> ready;
      for (int i = 0; i < k; ++i)
        if (indeg[i] == 0) ready.insert(i);
      std::vector<int> order;
      order.reserve(k);
      while (!ready.empty()) {
        int i = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(i);
        for (int j : adj[i])
          if (--indeg[j] == 0) ready.insert(j);
      }
      if (int(order.size()) != k) return ReorderStatus::Incompatible;
      std::vector<int> arranged;
      arranged.reserve(k);
      for (int idx : order) arranged.push_back(kids[idx]);
      t.set_children_order(v, arranged);
    } else {
      bool fwd = true, bwd = true;
      for (int i = 0; i < k; ++i)
        for (int j : adj[i]) {
          if (i > j) fwd = false;
          if (i < j) bwd = false;
        }
      if (fwd) {
        // keep as is
      } else if (bwd) {
        t.reverse_children(v);
      } else {
        return ReorderStatus::Incompatible;
      }
    }

    // Contract v's subtree into one component, merging arc lists into the
    // largest one.
    int root_rep = reps[0];
    for (int i = 1; i < k; ++i) {
      int a = find(root_rep), b = find(reps[i]);
      if (a == b) continue;
      if (uf_size[a] < uf_size[b]) std::swap(a, b);
      uf_parent[b] = a;
      uf_size[a] += uf_size[b];
      if (out_arcs[a].size() < out_arcs[b].size()) out_arcs[a].swap(out_arcs[b]);
      out_arcs[a].insert(out_arcs[a].end(), out_arcs[b].begin(), out_arcs[b].end());
      out_arcs[b].clear();
      out_arcs[b].shrink_to_fit();
      root_rep = a;
    }
  }
  return ReorderStatus::Reordered;
}

}  // namespace irex
