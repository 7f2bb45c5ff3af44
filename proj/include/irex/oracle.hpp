#pragma once
// Deliberately naive reference implementations used by tests and the
// self-check harness. Nothing here shares algorithmic code with the fast
// paths; only the plain data types from graph/interval are reused.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "irex/graph.hpp"
#include "irex/interval.hpp"

namespace irex::oracle {

// All orderings of {0..num_elements-1} in which every given set occupies
// consecutive positions. Exhaustive permutation scan; num_elements <= 8.
inline std::set<std::vector<int>> brute_consecutive(
    int num_elements, const std::vector<std::vector<int>>& sets) {
  if (num_elements > 8) throw std::invalid_argument("brute_consecutive: too large");
  std::set<std::vector<int>> out;
  std::vector<int> perm(num_elements);
  std::iota(perm.begin(), perm.end(), 0);
  if (num_elements == 0) {
    out.insert({});
    return out;
  }
  std::vector<int> pos(num_elements);
  do {
    for (int i = 0; i < num_elements; ++i) pos[perm[i]] = i;
    bool ok = true;
    for (const auto& s : sets) {
      if (s.empty()) continue;
      int lo = num_elements, hi = -1;
      for (int e : s) {
        lo = std::min(lo, pos[e]);
        hi = std::max(hi, pos[e]);
      }
      if (hi - lo + 1 != int(s.size())) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace detail {

// Searches over orderings of interval endpoints directly. A timeline is a
// sequence of columns: the pre-drawn endpoint coordinates appear as fixed
// columns in sorted order, and each free endpoint occupies its own column
// strictly between them. Ties involving free endpoints are never needed:
// any representation can be perturbed, one endpoint at a time, so that free
// endpoints are pairwise distinct and avoid pre-drawn coordinates while all
// closed-interval intersections are preserved (touching pairs become proper
// overlaps inside an event-free gap). Hence searching tie-free timelines is
// exhaustive over extendibility, and every accepted timeline converts back
// into concrete coordinates.
class ExtendSearch {
 public:
  ExtendSearch(const Graph& g, const PredrawnMap& predrawn) : g_(g) {
    const int n = g.n();
    pre_index_.assign(n, -1);
    for (int v = 0; v < int(predrawn.size()); ++v) {
      if (!predrawn[v]) continue;
      pre_index_[v] = int(pre_.size());
      pre_.push_back({v, *predrawn[v]});
    }
    for (int v = 0; v < n; ++v)
      if (pre_index_[v] < 0) {
        free_index_.push_back(v);
      }
    if (int(free_index_.size()) > 14)
      throw std::invalid_argument("brute extend search: too many free vertices");
    if (int(pre_.size()) > 60)
      throw std::invalid_argument("brute extend search: too many pre-drawn");

    std::set<Rational> coord_set;
    for (const auto& p : pre_) {
      coord_set.insert(p.span.left);
      coord_set.insert(p.span.right);
    }
    coords_.assign(coord_set.begin(), coord_set.end());
    const int d = int(coords_.size());
    pre_opening_.assign(d, 0);
    gap_cover_.assign(d + 1, 0);
    for (int i = 0; i < int(pre_.size()); ++i) {
      const auto& span = pre_[i].span;
      int lg = coord_group(span.left), rg = coord_group(span.right);
      pre_opening_[lg] |= std::uint64_t(1) << i;
      // gap g is the open range between coordinates g-1 and g
      for (int gp = lg + 1; gp <= rg; ++gp) gap_cover_[gp] |= std::uint64_t(1) << i;
    }

    const int f = int(free_index_.size());
    free_nb_.assign(f, 0);
    pre_nb_.assign(f, 0);
    first_pre_close_.assign(f, d + 1);
    last_pre_open_.assign(f, 0);
    for (int i = 0; i < f; ++i) {
      for (int u : g.neighbors(free_index_[i])) {
        if (pre_index_[u] >= 0) {
          int pi = pre_index_[u];
          pre_nb_[i] |= std::uint64_t(1) << pi;
          first_pre_close_[i] =
              std::min(first_pre_close_[i], coord_group(pre_[pi].span.right) + 1);
          last_pre_open_[i] =
              std::max(last_pre_open_[i], coord_group(pre_[pi].span.left) + 1);
        } else {
          for (int j = 0; j < f; ++j)
            if (free_index_[j] == u) free_nb_[i] |= std::uint64_t(1) << j;
        }
      }
    }
  }

  std::optional<Representation> run() {
    // Pre-drawn pairs must already agree with the graph.
    for (std::size_t i = 0; i < pre_.size(); ++i)
      for (std::size_t j = i + 1; j < pre_.size(); ++j)
        if (pre_[i].span.intersects(pre_[j].span) !=
            g_.has_edge(pre_[i].vertex, pre_[j].vertex))
          return std::nullopt;
    moves_.clear();
    failed_.clear();
    if (!search(0, 0, 0)) return std::nullopt;
    return realize();
  }

 private:
  struct Pre {
    int vertex;
    ClosedInterval span;
  };
  struct Move {
    enum class Kind { Advance, Open, Close } kind;
    int free_slot;
  };

  int coord_group(const Rational& x) const {
    return int(std::lower_bound(coords_.begin(), coords_.end(), x) - coords_.begin());
  }

  bool search(int g, std::uint64_t open, std::uint64_t opened) {
    const int d = int(coords_.size());
    const int f = int(free_index_.size());
    const std::uint64_t all = (std::uint64_t(1) << f) - 1;
    if (g == d && open == 0 && opened == all) return true;
    std::uint64_t key =
        (std::uint64_t(g) << 56) | (open << 28) | opened;  // f <= 14 < 28 bits
    if (failed_.count(key)) return false;

    // Advance past the next pre-drawn coordinate.
    if (g < d) {
      bool ok = true;
      for (int w = 0; w < f && ok; ++w)
        if (open >> w & 1)
          if ((pre_opening_[g] & ~pre_nb_[w]) != 0) ok = false;
      if (ok) {
        moves_.push_back({Move::Kind::Advance, -1});
        if (search(g + 1, open, opened)) return true;
        moves_.pop_back();
      }
    }
    // Open one free vertex inside the current gap.
    for (int v = 0; v < f; ++v) {
      if (opened >> v & 1) continue;
      if ((open & ~free_nb_[v]) != 0) continue;               // present non-neighbor
      if (((opened & ~open) & free_nb_[v]) != 0) continue;    // neighbor already gone
      if ((gap_cover_[g] & ~pre_nb_[v]) != 0) continue;       // covered by non-neighbor
      if (first_pre_close_[v] <= g) continue;                 // pre neighbor already gone
      moves_.push_back({Move::Kind::Open, v});
      if (search(g, open | (std::uint64_t(1) << v), opened | (std::uint64_t(1) << v)))
        return true;
      moves_.pop_back();
    }
    // Close one open free vertex inside the current gap.
    for (int v = 0; v < f; ++v) {
      if (!(open >> v & 1)) continue;
      if (last_pre_open_[v] > g) continue;  // a pre neighbor has not started yet
      moves_.push_back({Move::Kind::Close, v});
      if (search(g, open & ~(std::uint64_t(1) << v), opened)) return true;
      moves_.pop_back();
    }
    failed_.insert(key);
    return false;
  }

  Representation realize() const {
    const int d = int(coords_.size());
    // Count free events per gap, then spread them out on fresh coordinates.
    std::vector<int> gap_total(d + 1, 0);
    {
      int g = 0;
      for (const auto& mv : moves_)
        if (mv.kind == Move::Kind::Advance)
          ++g;
        else
          ++gap_total[g];
    }
    Representation rep(g_.n());
    for (const auto& p : pre_) rep[p.vertex] = p.span;
    std::vector<Rational> lefts(free_index_.size()), rights(free_index_.size());
    int g = 0, used = 0;
    for (const auto& mv : moves_) {
      if (mv.kind == Move::Kind::Advance) {
        ++g;
        used = 0;
        continue;
      }
      ++used;
      Rational x;
      if (d == 0) {
        x = Rational(used);
      } else if (g == 0) {
        x = coords_.front() - Rational(gap_total[0] + 1 - used);
      } else if (g == d) {
        x = coords_.back() + Rational(used);
      } else {
        Rational lo = coords_[g - 1], hi = coords_[g];
        x = lo + (hi - lo) * Rational(used, gap_total[g] + 1);
      }
      if (mv.kind == Move::Kind::Open)
        lefts[mv.free_slot] = x;
      else
        rights[mv.free_slot] = x;
    }
    for (std::size_t i = 0; i < free_index_.size(); ++i)
      rep[free_index_[i]] = ClosedInterval(lefts[i], rights[i]);
    return rep;
  }

  const Graph& g_;
  std::vector<Pre> pre_;
  std::vector<int> pre_index_;
  std::vector<int> free_index_;
  std::vector<Rational> coords_;
  std::vector<std::uint64_t> pre_opening_, gap_cover_;
  std::vector<std::uint64_t> free_nb_, pre_nb_;
  std::vector<int> first_pre_close_, last_pre_open_;
  std::vector<Move> moves_;
  std::set<std::uint64_t> failed_;
};

}  // namespace detail

// Extendibility of a partial representation, with a witness on success.
inline std::optional<Representation> brute_extend_witness(
    const Graph& g, const PredrawnMap& predrawn) {
  detail::ExtendSearch search(g, predrawn);
  return search.run();
}

inline bool brute_extend(const Graph& g, const PredrawnMap& predrawn) {
  return brute_extend_witness(g, predrawn).has_value();
}

// Interval-graph recognition by endpoint-order search (empty partial).
inline std::optional<Representation> brute_interval_witness(const Graph& g) {
  return brute_extend_witness(g, PredrawnMap(g.n()));
}

inline bool brute_interval(const Graph& g) {
  return brute_interval_witness(g).has_value();
}

// All maximal cliques by subset enumeration; n <= 16.
inline std::vector<std::vector<int>> brute_maximal_cliques(const Graph& g) {
  const int n = g.n();
  if (n > 16) throw std::invalid_argument("brute_maximal_cliques: too large");
  std::vector<std::uint32_t> cliques;
  for (std::uint32_t s = 1; s < (std::uint32_t(1) << n); ++s) {
    bool clique = true;
    for (int u = 0; u < n && clique; ++u)
      if (s >> u & 1)
        for (int v = u + 1; v < n && clique; ++v)
          if ((s >> v & 1) && !g.has_edge(u, v)) clique = false;
    if (clique) cliques.push_back(s);
  }
  std::vector<std::vector<int>> out;
  for (std::uint32_t s : cliques) {
    bool maximal = true;
    for (std::uint32_t t : cliques)
      if (t != s && (s & t) == s) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) members.push_back(v);
    out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Chordality by scanning all vertex subsets for an induced cycle >= 4.
inline bool brute_is_chordal(const Graph& g) {
  const int n = g.n();
  if (n > 16) throw std::invalid_argument("brute_is_chordal: too large");
  for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) vs.push_back(v);
    if (vs.size() < 4) continue;
    // Induced cycle: connected, every member has induced degree exactly 2.
    std::size_t edges = 0;
    bool deg_ok = true;
    for (int u : vs) {
      int d = 0;
      for (int v : vs)
        if (u != v && g.has_edge(u, v)) ++d;
      if (d != 2) {
        deg_ok = false;
        break;
      }
      edges += d;
    }
    if (!deg_ok || edges != 2 * vs.size()) continue;
    // Degree-2 everywhere means disjoint cycles; connectivity makes it one.
    std::vector<int> stack{vs[0]};
    std::set<int> seen{vs[0]};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : vs)
        if (v != u && g.has_edge(u, v) && !seen.count(v)) {
          seen.insert(v);
          stack.push_back(v);
        }
    }
    if (seen.size() == vs.size()) return false;
  }
  return true;
}

// Simultaneous representation check for graphs sharing a vertex set I:
// enumerate weak orders over the 2|I| shared endpoints naively, realize each
// on integer coordinates, and ask brute_extend for every graph.
// shared_ids[i][j] = vertex id of shared element j inside graph i.
inline bool brute_simrep(const std::vector<Graph>& graphs,
                         const std::vector<std::vector<int>>& shared_ids) {
  const int k = int(graphs.size());
  if (k == 0) return true;
  const int ell = int(shared_ids.empty() ? 0 : shared_ids[0].size());
  if (ell > 3) throw std::invalid_argument("brute_simrep: too many shared vertices");
  for (const auto& ids : shared_ids)
    if (int(ids.size()) != ell)
      throw std::invalid_argument("brute_simrep: ragged shared map");
  if (ell == 0) {
    for (const auto& g : graphs)
      if (!brute_interval(g)) return false;
    return true;
  }

  const int slots = 2 * ell;  // endpoint order: slot 2j left of j, 2j+1 right
  std::vector<int> level(slots, 1);
  std::set<std::vector<int>> tried;
  while (true) {
    bool ok_levels = true;
    for (int j = 0; j < ell; ++j)
      if (level[2 * j] > level[2 * j + 1]) ok_levels = false;
    if (ok_levels) {
      // Normalize to dense levels so duplicates collapse.
      std::vector<int> sorted(level.begin(), level.end());
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      std::vector<int> norm(slots);
      for (int i = 0; i < slots; ++i)
        norm[i] = int(std::lower_bound(sorted.begin(), sorted.end(), level[i]) -
                      sorted.begin());
      if (tried.insert(norm).second) {
        std::vector<ClosedInterval> shared_spans;
        shared_spans.reserve(ell);
        for (int j = 0; j < ell; ++j)
          shared_spans.emplace_back(Rational(norm[2 * j]), Rational(norm[2 * j + 1]));
        bool all_ok = true;
        for (int i = 0; i < k && all_ok; ++i) {
          PredrawnMap pre(graphs[i].n());
          for (int j = 0; j < ell; ++j) pre[shared_ids[i][j]] = shared_spans[j];
          if (!brute_extend(graphs[i], pre)) all_ok = false;
        }
        if (all_ok) return true;
      }
    }
    // Next assignment of levels in {1..slots}^slots.
    int i = 0;
    while (i < slots && level[i] == slots) level[i++] = 1;
    if (i == slots) break;
    ++level[i];
  }
  return false;
}

}  // namespace irex::oracle
