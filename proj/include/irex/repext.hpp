#pragma once

// Extension of partial interval representations.  Given a graph and a set of
// pre-drawn vertex intervals, decides whether the free vertices can be drawn
// so that intervals intersect exactly for the edges of the graph, and builds
// such a representation when one exists.
//
// Pipeline: maximal cliques (chordality check) -> PQ-tree of the consecutive
// clique orders -> feasible-position hull per clique against the pre-drawn
// intervals -> tree reordering -> left-to-right clique-point placement ->
// vertex intervals spanning their clique points.

#include <algorithm>
#include <istream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chordal.hpp"
#include "graph.hpp"
#include "interval.hpp"
#include "pq_tree.hpp"
#include "rational.hpp"
#include "reorder.hpp"

namespace irex {

// Builds a pre-drawn map for an n-vertex graph from parsed interval lines.
// Vertices may appear at most once; missing vertices stay free.
inline PredrawnMap partial_from_lines(const std::vector<IntervalLine>& lines, int n) {
  PredrawnMap pre(n);
  for (const auto& line : lines) {
    if (line.vertex >= n)
      throw parse_error(parse_error::Kind::IdOutOfRange, 0,
                        "vertex " + std::to_string(line.vertex) + " out of range");
    if (pre[line.vertex])
      throw parse_error(parse_error::Kind::DuplicateVertex, 0,
                        "vertex " + std::to_string(line.vertex) + " drawn twice");
    pre[line.vertex] = line.span;
  }
  return pre;
}

// Reads "vertex left right" lines into a pre-drawn map for an n-vertex graph.
inline PredrawnMap load_partial(std::istream& in, int n) {
  return partial_from_lines(parse_interval_lines(in), n);
}

// The pre-drawn endpoints cut the line into parts on which the set of open
// pre-drawn intervals is constant.  Only coverage *counts* are stored: a
// clique containing c pre-drawn vertices needs a spot covered by exactly
// those c intervals, and inside the common range of its members a matching
// count already implies a matching set.
struct Parts {
  std::vector<Rational> coord;    // distinct pre-drawn endpoints, ascending
  std::vector<int> cnt_at;        // intervals covering coord[i]
  std::vector<int> cnt_between;   // [i] covers (coord[i-1], coord[i]); ends are the unbounded sides
};

inline Parts build_parts(const PredrawnMap& pre) {
  Parts parts;
  std::vector<Rational> lefts, rights;
  for (const auto& iv : pre) {
    if (!iv) continue;
    lefts.push_back(iv->left);
    rights.push_back(iv->right);
  }
  parts.coord = lefts;
  parts.coord.insert(parts.coord.end(), rights.begin(), rights.end());
  std::sort(parts.coord.begin(), parts.coord.end());
  parts.coord.erase(std::unique(parts.coord.begin(), parts.coord.end()),
                    parts.coord.end());
  std::sort(lefts.begin(), lefts.end());
  std::sort(rights.begin(), rights.end());
  const int d = int(parts.coord.size());
  parts.cnt_at.resize(d);
  parts.cnt_between.assign(d + 1, 0);
  for (int i = 0; i < d; ++i) {
    const Rational& x = parts.coord[i];
    auto opened = std::upper_bound(lefts.begin(), lefts.end(), x) - lefts.begin();
    parts.cnt_at[i] =
        int(opened - (std::lower_bound(rights.begin(), rights.end(), x) - rights.begin()));
    if (i + 1 <= d)
      parts.cnt_between[i + 1] =
          int(opened - (std::upper_bound(rights.begin(), rights.end(), x) - rights.begin()));
  }
  return parts;
}

namespace detail {

// A part viewed as a host for clique points: either one closed coordinate or
// an open segment between neighbouring coordinates (unbounded at the ends).
struct Atom {
  Extended lo, hi;
  bool point;
  int cnt;
};

inline std::vector<Atom> atoms_of(const Parts& parts) {
  const int d = int(parts.coord.size());
  std::vector<Atom> atoms;
  atoms.reserve(2 * d + 1);
  if (d == 0) {
    atoms.push_back({Extended::neg_inf(), Extended::pos_inf(), false, 0});
    return atoms;
  }
  atoms.push_back({Extended::neg_inf(), Extended(parts.coord[0]), false,
                   parts.cnt_between[0]});
  for (int i = 0; i < d; ++i) {
    atoms.push_back({Extended(parts.coord[i]), Extended(parts.coord[i]), true,
                     parts.cnt_at[i]});
    Extended hi = i + 1 < d ? Extended(parts.coord[i + 1]) : Extended::pos_inf();
    atoms.push_back({Extended(parts.coord[i]), hi, false, parts.cnt_between[i + 1]});
  }
  return atoms;
}

// Whether the atom has no position >= x (resp. <= x); segments are open.
inline bool atom_left_of(const Atom& a, const Extended& x) {
  return a.point ? a.hi < x : a.hi <= x;
}
inline bool atom_right_of(const Atom& a, const Extended& x) {
  return a.point ? a.lo > x : a.lo >= x;
}

}  // namespace detail

// Placement data for one maximal clique: how many pre-drawn members it has,
// the common range of their intervals, and the hull of the positions covered
// by exactly its members.  No feasible position at all leaves region empty.
struct CliqueConstraint {
  int count = 0;
  Extended lstar = Extended::neg_inf();
  Extended rstar = Extended::pos_inf();
  std::optional<std::pair<Extended, Extended>> region;
};

inline std::vector<CliqueConstraint> sweep_constraints(const Parts& parts,
                                                       const CliqueList& cl,
                                                       const PredrawnMap& pre) {
  auto atoms = detail::atoms_of(parts);
  // Atom indices grouped by cover count, flat (bucket b = [off[b], off[b+1])),
  // each bucket ascending because the fill scans atoms in index order.
  int max_cnt = 0;
  for (const auto& a : atoms) max_cnt = std::max(max_cnt, a.cnt);
  std::vector<int> cnt_off(max_cnt + 2, 0);
  for (const auto& a : atoms) ++cnt_off[a.cnt + 1];
  for (int b = 0; b <= max_cnt; ++b) cnt_off[b + 1] += cnt_off[b];
  std::vector<int> cnt_dat(atoms.size());
  {
    std::vector<int> cur(cnt_off.begin(), cnt_off.end() - 1);
    for (int i = 0; i < int(atoms.size()); ++i) cnt_dat[cur[atoms[i].cnt]++] = i;
  }

  // The hot loop runs on coordinate indices instead of rational values: atom
  // 2j+1 is the point coord[j], so an atom lies strictly left of coord[j]
  // exactly when its index is below 2j+1 and strictly right when above.
  // Index -1 stands for -inf, index d for +inf.
  const int d = int(parts.coord.size());
  std::vector<char> has_pre(pre.size(), 0);
  std::vector<int> left_ix(pre.size()), right_ix(pre.size());
  for (std::size_t v = 0; v < pre.size(); ++v) {
    if (!pre[v]) continue;
    has_pre[v] = 1;
    left_ix[v] = int(std::lower_bound(parts.coord.begin(), parts.coord.end(),
                                      pre[v]->left) -
                     parts.coord.begin());
    right_ix[v] = int(std::lower_bound(parts.coord.begin(), parts.coord.end(),
                                       pre[v]->right) -
                      parts.coord.begin());
  }

  std::vector<CliqueConstraint> out(cl.cliques.size());
  for (std::size_t k = 0; k < cl.cliques.size(); ++k) {
    CliqueConstraint& c = out[k];
    int li = -1, ri = d;
    for (int v : cl.cliques[k]) {
      if (!has_pre[v]) continue;
      ++c.count;
      li = std::max(li, left_ix[v]);
      ri = std::min(ri, right_ix[v]);
    }
    if (li >= 0) c.lstar = Extended(parts.coord[li]);
    if (ri < d) c.rstar = Extended(parts.coord[ri]);
    if (ri < li || c.count > max_cnt) continue;
    auto lo = cnt_dat.begin() + cnt_off[c.count];
    auto hi = cnt_dat.begin() + cnt_off[c.count + 1];
    auto first = std::lower_bound(lo, hi, 2 * li + 1);
    if (first == hi || *first > 2 * ri + 1) continue;
    auto last = std::upper_bound(first, hi, 2 * ri + 1);
    c.region = {atoms[*first].lo, atoms[*(last - 1)].hi};
  }
  return out;
}

// A pair of pre-drawn vertices whose intervals contradict the graph: either
// they intersect without being adjacent, or they are adjacent but disjoint.
struct PredrawnConflict {
  int u, v;
  bool should_intersect;  // true: adjacent but drawn disjoint
};

// The pre-drawn intervals must represent the induced subgraph on the
// pre-drawn vertices; this finds any offending pair.  Adjacent pairs are
// scanned through the adjacency lists; intersecting pairs through a sweep
// that stops at the first non-edge, so at most m+1 candidates are touched.
inline std::optional<PredrawnConflict> find_predrawn_conflict(
    const Graph& g, const PredrawnMap& pre) {
  for (int u = 0; u < int(pre.size()); ++u) {
    if (!pre[u]) continue;
    for (int v : g.neighbors(u))
      if (u < v && pre[v] && !pre[u]->intersects(*pre[v]))
        return PredrawnConflict{u, v, true};
  }
  struct Event {
    Rational x;
    bool close;
    int v;
  };
  std::vector<Event> ev;
  for (int v = 0; v < int(pre.size()); ++v) {
    if (!pre[v]) continue;
    ev.push_back({pre[v]->left, false, v});
    ev.push_back({pre[v]->right, true, v});
  }
  std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.close != b.close) return !a.close;  // opens first: touching counts
    return a.v < b.v;
  });
  std::set<int> active;
  for (const auto& e : ev) {
    if (e.close) {
      active.erase(e.v);
      continue;
    }
    for (int u : active)
      if (!g.has_edge(u, e.v))
        return PredrawnConflict{std::min(u, e.v), std::max(u, e.v), false};
    active.insert(e.v);
  }
  return std::nullopt;
}

// Assigns a strictly increasing coordinate to every clique, in the given
// left-to-right order, inside the parts matching its constraint.  A first
// pass walks the atoms with a monotone pointer (an atom skipped before a
// later placement can never host anything again); a second pass spreads the
// cliques sharing an atom evenly, so coordinates stay small.
inline std::vector<Rational> place_clique_points(
    const Parts& parts, const std::vector<CliqueConstraint>& cons,
    const std::vector<int>& order) {
  auto atoms = detail::atoms_of(parts);
  const int k = int(order.size());
  std::vector<int> host(k, -1);
  std::size_t ptr = 0;
  bool point_used = false;
  for (int i = 0; i < k; ++i) {
    const CliqueConstraint& c = cons[order[i]];
    while (ptr < atoms.size()) {
      const auto& a = atoms[ptr];
      if (a.cnt == c.count && !detail::atom_left_of(a, c.lstar) &&
          !detail::atom_right_of(a, c.rstar) && !(a.point && point_used))
        break;
      ++ptr;
      point_used = false;
    }
    if (ptr == atoms.size())
      throw std::logic_error("clique placement ran out of feasible positions");
    host[i] = int(ptr);
    if (atoms[ptr].point) point_used = true;
  }

  std::vector<Rational> pt(cons.size());
  for (int i = 0; i < k;) {
    int j = i;
    while (j < k && host[j] == host[i]) ++j;
    const auto& a = atoms[host[i]];
    const int run = j - i;
    for (int r = 0; r < run; ++r) {
      Rational p;
      if (a.point) {
        p = a.lo.value();
      } else if (!a.lo.is_finite() && !a.hi.is_finite()) {
        p = Rational(r + 1);
      } else if (!a.lo.is_finite()) {
        p = a.hi.value() - Rational(run - r);
      } else if (!a.hi.is_finite()) {
        p = a.lo.value() + Rational(r + 1);
      } else {
        Rational step = (a.hi.value() - a.lo.value()) / Rational(run + 1);
        p = a.lo.value() + step * Rational(r + 1);
      }
      pt[order[i + r]] = p;
    }
    i = j;
  }
  return pt;
}

// Failure category, coarser than the reason text: the graph is not an
// interval graph at all, the pre-drawn intervals contradict the induced
// subgraph on the pre-drawn vertices, or everything is individually fine but
// no extension exists.
enum class ExtendFail { None, NotInterval, InvalidPartial, NotExtendible };

struct ExtendResult {
  bool extended = false;
  ExtendFail fail = ExtendFail::None;
  std::string reason;                  // set when not extendible
  Representation rep;                  // one interval per vertex when extended
  CliqueList cliques;                  // maximal cliques (set whenever chordal)
  std::vector<int> clique_order;       // clique ids, left to right
  std::vector<Rational> clique_point;  // position per clique id
};

namespace detail {

inline std::string list_vertices(const std::vector<int>& vs, std::size_t cap = 8) {
  std::string s;
  for (std::size_t i = 0; i < vs.size() && i < cap; ++i) {
    if (!s.empty()) s += ' ';
    s += std::to_string(vs[i]);
  }
  if (vs.size() > cap) s += " ...";
  return s;
}

}  // namespace detail

// Decides extendibility of a pre-drawn map and constructs a full
// representation.  Runs in O((n + m) log n) overall.
inline ExtendResult extend(const Graph& g, const PredrawnMap& pre) {
  if (int(pre.size()) != g.n())
    throw std::invalid_argument("pre-drawn map must have one slot per vertex");
  ExtendResult res;

  // The pre-drawn intervals must represent the induced subgraph on their own
  // vertices; checked up front so a bad partial is reported as such even when
  // the graph itself is not interval.
  if (auto bad = find_predrawn_conflict(g, pre)) {
    res.fail = ExtendFail::InvalidPartial;
    if (bad->should_intersect)
      res.reason = "pre-drawn intervals of adjacent vertices " +
                   std::to_string(bad->u) + " and " + std::to_string(bad->v) +
                   " are disjoint";
    else
      res.reason = "pre-drawn intervals of non-adjacent vertices " +
                   std::to_string(bad->u) + " and " + std::to_string(bad->v) +
                   " intersect";
    return res;
  }

  auto mc = maximal_cliques(g);
  if (std::holds_alternative<NotChordal>(mc)) {
    res.fail = ExtendFail::NotInterval;
    res.reason = "graph is not chordal: vertex " +
                 std::to_string(std::get<NotChordal>(mc).witness) +
                 " lies on a chordless cycle";
    return res;
  }
  res.cliques = std::get<CliqueList>(std::move(mc));
  const int k = int(res.cliques.cliques.size());
  if (k == 0) {
    res.extended = true;
    return res;
  }

  PQTree tree = PQTree::universal(k);
  for (int v = 0; v < g.n(); ++v) {
    if (!tree.reduce(res.cliques.member_of[v])) {
      res.fail = ExtendFail::NotInterval;
      res.reason = "not an interval graph: the maximal cliques of vertex " +
                   std::to_string(v) + " cannot be made consecutive";
      return res;
    }
  }

  Parts parts = build_parts(pre);
  auto cons = sweep_constraints(parts, res.cliques, pre);
  for (int a = 0; a < k; ++a) {
    if (!cons[a].region) {
      res.fail = ExtendFail::NotExtendible;
      res.reason = "no feasible position for the maximal clique {" +
                   detail::list_vertices(res.cliques.cliques[a]) +
                   "} against the pre-drawn intervals";
      return res;
    }
  }

  std::vector<std::optional<std::pair<Extended, Extended>>> regions(k);
  for (int a = 0; a < k; ++a) regions[a] = cons[a].region;
  auto seq = SortedEndpointSequence::from_regions(regions);
  if (reorder_interval(tree, seq) == ReorderStatus::Incompatible) {
    res.fail = ExtendFail::NotExtendible;
    res.reason =
        "pre-drawn intervals force an impossible left-to-right order of the "
        "maximal cliques";
    return res;
  }

  res.clique_order = tree.frontier();
  res.clique_point = place_clique_points(parts, cons, res.clique_order);

  res.rep.assign(g.n(), ClosedInterval());
  std::vector<char> seen(g.n(), 0);
  for (int a : res.clique_order) {
    const Rational& p = res.clique_point[a];
    for (int v : res.cliques.cliques[a]) {
      if (pre[v]) continue;
      if (!seen[v]) {
        seen[v] = 1;
        res.rep[v] = ClosedInterval(p, p);
      } else {
        res.rep[v].right = p;  // clique points increase left to right
      }
    }
  }
  for (int v = 0; v < g.n(); ++v)
    if (pre[v]) res.rep[v] = *pre[v];

  auto chk = verify_extension(g, pre, res.rep);
  if (!chk.ok)
    throw std::logic_error("internal error: constructed representation failed "
                           "verification: " + chk.reason);
  res.extended = true;
  return res;
}

// Interval-graph recognition: extension with nothing pre-drawn.
inline ExtendResult recognize(const Graph& g) { return extend(g, PredrawnMap(g.n())); }

}  // namespace irex
