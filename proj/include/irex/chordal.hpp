#pragma once
// Lexicographic BFS, chordality testing, and maximal cliques of chordal
// graphs. Cliques come out along the elimination order, at most n of them,
// with total size O(n + m).

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "irex/graph.hpp"

namespace irex {

// Lexicographic BFS order; ties always break toward the lowest vertex id,
// so the result is deterministic. Partition refinement over intrusive lists:
// vertices sit in doubly-linked per-bucket lists, buckets in a doubly-linked
// list of their own, all stored as flat index arrays. O(n + m) total.
inline std::vector<int> lex_bfs(const Graph& g) {
  const int n = g.n();
  std::vector<int> order;
  order.reserve(n);
  if (n == 0) return order;

  // Vertex lists. Adjacency lists are ascending, so every bucket's list stays
  // ascending by id and the head is always the lowest id in the bucket.
  std::vector<int> vnext(n), vprev(n), bucket_of(n, 0);
  // Bucket records, indexed by id; new buckets are appended on split.
  std::vector<int> head{0}, tail{n - 1}, bnext{-1}, bprev{-1};
  std::vector<int> split_round{-1}, front_half{-1};
  int first_bucket = 0;
  for (int v = 0; v < n; ++v) {
    vnext[v] = v + 1 < n ? v + 1 : -1;
    vprev[v] = v - 1;
  }
  std::vector<bool> visited(n, false);

  auto unlink_vertex = [&](int w) {
    int b = bucket_of[w];
    if (vprev[w] >= 0) vnext[vprev[w]] = vnext[w];
    else head[b] = vnext[w];
    if (vnext[w] >= 0) vprev[vnext[w]] = vprev[w];
    else tail[b] = vprev[w];
    if (head[b] < 0) {  // bucket emptied: drop it from the bucket list
      if (bprev[b] >= 0) bnext[bprev[b]] = bnext[b];
      else first_bucket = bnext[b];
      if (bnext[b] >= 0) bprev[bnext[b]] = bprev[b];
    }
  };

  for (int round = 0; round < n; ++round) {
    int v = head[first_bucket];
    unlink_vertex(v);
    visited[v] = true;
    order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (visited[w]) continue;
      int b = bucket_of[w];
      if (split_round[b] != round) {
        // New front half for vertices of this bucket adjacent to v.
        split_round[b] = round;
        front_half[b] = int(head.size());
        head.push_back(-1);
        tail.push_back(-1);
        bnext.push_back(b);
        bprev.push_back(bprev[b]);
        split_round.push_back(-1);
        front_half.push_back(-1);
        if (bprev[b] >= 0) bnext[bprev[b]] = front_half[b];
        else first_bucket = front_half[b];
        bprev[b] = front_half[b];
      }
      int nb = front_half[b];
      unlink_vertex(w);
      // Append at the back: neighbors arrive in ascending id order.
      vprev[w] = tail[nb];
      vnext[w] = -1;
      if (tail[nb] >= 0) vnext[tail[nb]] = w;
      else head[nb] = w;
      tail[nb] = w;
      bucket_of[w] = nb;
    }
  }
  return order;
}

struct NotChordal {
  // A vertex whose neighbors earlier in the LexBFS order do not form a clique.
  int witness;
};

struct CliqueList {
  // Each clique is a sorted vertex list; ids follow construction order.
  std::vector<std::vector<int>> cliques;
  // member_of[v] = ids of cliques containing v, ascending.
  std::vector<std::vector<int>> member_of;
};

namespace detail {

struct EliminationData {
  std::vector<int> order;     // LexBFS order
  std::vector<int> position;  // position[v] = index in `order`
  // madj(v) = neighbors of v earlier in the LexBFS order (these must form a
  // clique in a chordal graph when v is eliminated in reverse order), stored
  // flat and ascending by id. parent[v] = the latest of them, or -1.
  std::vector<int> madj_off, madj_dat;
  std::vector<int> parent;

  std::span<const int> madj(int v) const {
    return {madj_dat.data() + madj_off[v], madj_dat.data() + madj_off[v + 1]};
  }
};

inline EliminationData elimination_data(const Graph& g) {
  const int n = g.n();
  EliminationData d;
  d.order = lex_bfs(g);
  d.position.assign(n, -1);
  for (int i = 0; i < n; ++i) d.position[d.order[i]] = i;
  d.madj_off.assign(n + 1, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v))
      if (d.position[u] < d.position[v]) ++d.madj_off[v + 1];
  for (int v = 0; v < n; ++v) d.madj_off[v + 1] += d.madj_off[v];
  d.madj_dat.resize(d.madj_off[n]);
  d.parent.assign(n, -1);
  std::vector<int> next(d.madj_off.begin(), d.madj_off.end() - 1);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v))
      if (d.position[u] < d.position[v]) {
        d.madj_dat[next[v]++] = u;
        if (d.parent[v] < 0 || d.position[u] > d.position[d.parent[v]])
          d.parent[v] = u;
      }
  return d;
}

// Verifies that reversing the LexBFS order eliminates the graph perfectly.
// Returns a witness vertex when it does not (i.e. the graph is not chordal).
inline std::optional<NotChordal> check_elimination(const Graph& g,
                                                   const EliminationData& d) {
  const int n = g.n();
  // For each v (processed from the back of the LexBFS order), let p be the
  // latest earlier neighbor; all other earlier neighbors of v must also be
  // earlier neighbors of p. Demands are deposited at p and checked there.
  std::vector<int> cnt(n + 1, 0);
  for (int v = 0; v < n; ++v)
    if (d.parent[v] >= 0) cnt[d.parent[v] + 1] += int(d.madj(v).size()) - 1;
  for (int p = 0; p < n; ++p) cnt[p + 1] += cnt[p];
  std::vector<int> need(cnt[n]), depositor(cnt[n]), slot(cnt.begin(), cnt.end() - 1);
  for (int i = n - 1; i >= 0; --i) {
    int v = d.order[i], p = d.parent[v];
    if (p < 0) continue;
    for (int w : d.madj(v))
      if (w != p) {
        need[slot[p]] = w;
        depositor[slot[p]++] = v;
      }
  }
  // Mark each p's neighborhood once, then test its demands by array lookup.
  std::vector<int> adj_mark(n, -1);
  for (int p = 0; p < n; ++p) {
    if (cnt[p] == cnt[p + 1]) continue;
    for (int w : g.neighbors(p)) adj_mark[w] = p;
    for (int s = cnt[p]; s < cnt[p + 1]; ++s)
      if (adj_mark[need[s]] != p) return NotChordal{depositor[s]};
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<NotChordal> check_chordal(const Graph& g) {
  return detail::check_elimination(g, detail::elimination_data(g));
}

// Maximal cliques of a chordal graph, or NotChordal with a witness.
// For each vertex v the set {v} + earlier neighbors is a clique; it is kept
// unless a later vertex extends it by exactly one element.
inline std::variant<CliqueList, NotChordal> maximal_cliques(const Graph& g) {
  auto d = detail::elimination_data(g);
  if (auto bad = detail::check_elimination(g, d)) return *bad;
  const int n = g.n();
  std::vector<bool> absorbed(n, false);
  for (int v = 0; v < n; ++v) {
    int p = d.parent[v];
    if (p >= 0 && d.madj(p).size() + 1 == d.madj(v).size()) absorbed[p] = true;
  }
  CliqueList out;
  out.member_of.assign(n, {});
  // Exact-size the membership lists up front (saves regrowth churn).
  std::vector<int> mem_cnt(n, 0);
  for (int v = 0; v < n; ++v) {
    if (absorbed[v]) continue;
    ++mem_cnt[v];
    for (int u : d.madj(v)) ++mem_cnt[u];
  }
  for (int u = 0; u < n; ++u) out.member_of[u].reserve(mem_cnt[u]);
  for (int i = 0; i < n; ++i) {
    int v = d.order[i];
    if (absorbed[v]) continue;
    auto mv = d.madj(v);
    std::vector<int> clique;
    clique.reserve(mv.size() + 1);
    // madj(v) is ascending; splice v in to keep the clique sorted.
    auto mid = std::upper_bound(mv.begin(), mv.end(), v);
    clique.insert(clique.end(), mv.begin(), mid);
    clique.push_back(v);
    clique.insert(clique.end(), mid, mv.end());
    int id = int(out.cliques.size());
    for (int u : clique) out.member_of[u].push_back(id);
    out.cliques.push_back(std::move(clique));
  }
  return out;
}

}  // namespace irex
