#pragma once
// Closed intervals with rational endpoints, interval-family intersection
// graphs, and verification of extensions against a target graph.

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "irex/graph.hpp"
#include "irex/rational.hpp"

namespace irex {

struct ClosedInterval {
  Rational left;
  Rational right;

  ClosedInterval() = default;
  ClosedInterval(Rational l, Rational r) : left(l), right(r) {
    if (right < left) throw std::invalid_argument("interval with right < left");
  }

  bool contains(const Rational& x) const { return left <= x && x <= right; }
  bool intersects(const ClosedInterval& o) const {
    return left <= o.right && o.left <= right;
  }
  friend bool operator==(const ClosedInterval& a, const ClosedInterval& b) {
    return a.left == b.left && a.right == b.right;
  }
};

// Full representation: one interval per vertex, indexed by vertex id.
using Representation = std::vector<ClosedInterval>;
// Pre-drawn subset: vertices without an interval hold nullopt.
using PredrawnMap = std::vector<std::optional<ClosedInterval>>;

namespace detail {

// Enumerates intersecting pairs of closed intervals in O((n + p) log n) where
// p is the number of pairs reported. Touching endpoints count as
// intersection, so left events at a coordinate fire before right events.
// Returns false (early) once `emit` refuses a pair.
template <typename Emit>
bool for_each_intersecting_pair(const Representation& rep, Emit&& emit) {
  const int n = int(rep.size());
  struct Event {
    Rational x;
    bool is_left;
    int v;
  };
  std::vector<Event> events;
  events.reserve(2 * std::size_t(n));
  for (int v = 0; v < n; ++v) {
    events.push_back({rep[v].left, true, v});
    events.push_back({rep[v].right, false, v});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.is_left != b.is_left) return a.is_left;  // opens before closes
    return a.v < b.v;
  });
  std::set<int> active;
  for (const Event& e : events) {
    if (e.is_left) {
      for (int u : active)
        if (!emit(std::min(u, e.v), std::max(u, e.v))) return false;
      active.insert(e.v);
    } else {
      active.erase(e.v);
    }
  }
  return true;
}

}  // namespace detail

// Intersection graph of a full interval family; closed semantics, so
// intervals sharing only an endpoint are adjacent.
inline Graph intersection_graph(const Representation& rep) {
  std::vector<std::pair<int, int>> edges;
  detail::for_each_intersecting_pair(rep, [&](int u, int v) {
    edges.emplace_back(u, v);
    return true;
  });
  return Graph::from_edges(int(rep.size()), edges);
}

struct VerifyResult {
  bool ok = false;
  std::string reason;
};

// Checks that `full` realizes G exactly and keeps every pre-drawn interval
// verbatim. Runs in O((n + m) log n); never enumerates more than m+1 pairs.
inline VerifyResult verify_extension(const Graph& g, const PredrawnMap& predrawn,
                                     const Representation& full) {
  if (int(full.size()) != g.n())
    return {false, "representation covers " + std::to_string(full.size()) +
                       " vertices, graph has " + std::to_string(g.n())};
  if (int(predrawn.size()) > g.n())
    return {false, "pre-drawn map larger than vertex set"};
  for (int v = 0; v < int(predrawn.size()); ++v) {
    if (!predrawn[v]) continue;
    if (!(full[v] == *predrawn[v]))
      return {false, "pre-drawn interval of vertex " + std::to_string(v) +
                         " was modified"};
  }
  std::size_t found = 0;
  int bad_u = -1, bad_v = -1;
  bool complete = detail::for_each_intersecting_pair(full, [&](int u, int v) {
    if (!g.has_edge(u, v)) {
      bad_u = u;
      bad_v = v;
      return false;
    }
    ++found;
    return true;
  });
  if (!complete)
    return {false, "intervals of non-adjacent vertices " + std::to_string(bad_u) +
                       " and " + std::to_string(bad_v) + " intersect"};
  if (found != g.m()) {
    for (auto [u, v] : g.edges())
      if (!full[u].intersects(full[v]))
        return {false, "intervals of adjacent vertices " + std::to_string(u) +
                           " and " + std::to_string(v) + " are disjoint"};
    return {false, "edge count mismatch"};
  }
  return {true, ""};
}

// --- text form: one "v left right" line per interval -----------------------

struct IntervalLine {
  int vertex;
  ClosedInterval span;
};

inline std::vector<IntervalLine> parse_interval_lines(std::istream& in) {
  std::vector<IntervalLine> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::blank_or_comment(line)) continue;
    std::istringstream ss(detail::strip_comment(line));
    long long v = 0;
    std::string ls, rs, extra;
    if (!(ss >> v >> ls >> rs) || (ss >> extra))
      throw parse_error(parse_error::Kind::MalformedLine, lineno,
                        "expected 'vertex left right'");
    auto l = Rational::parse(ls);
    auto r = Rational::parse(rs);
    if (!l || !r)
      throw parse_error(parse_error::Kind::BadRational, lineno,
                        "bad rational in '" + line + "'");
    if (*r < *l)
      throw parse_error(parse_error::Kind::BadInterval, lineno,
                        "interval with right < left");
    if (v < 0)
      throw parse_error(parse_error::Kind::IdOutOfRange, lineno,
                        "negative vertex id");
    out.push_back({int(v), ClosedInterval(*l, *r)});
  }
  return out;
}

inline std::string format_representation(const Representation& rep) {
  std::ostringstream out;
  for (int v = 0; v < int(rep.size()); ++v)
    out << v << " " << rep[v].left.str() << " " << rep[v].right.str() << "\n";
  return out.str();
}

inline Representation parse_representation(std::istream& in, int n) {
  auto lines = parse_interval_lines(in);
  Representation rep(n);
  std::vector<bool> seen(n, false);
  for (const auto& l : lines) {
    if (l.vertex >= n)
      throw parse_error(parse_error::Kind::IdOutOfRange, 0, "vertex id too large");
    if (seen[l.vertex])
      throw parse_error(parse_error::Kind::DuplicateVertex, 0,
                        "vertex " + std::to_string(l.vertex) + " listed twice");
    seen[l.vertex] = true;
    rep[l.vertex] = l.span;
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v])
      throw parse_error(parse_error::Kind::MalformedLine, 0,
                        "vertex " + std::to_string(v) + " missing");
  return rep;
}

}  // namespace irex
