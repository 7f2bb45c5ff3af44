#pragma once

// Simultaneous interval representations.  Several graphs share a common
// vertex set I (and nothing else, including the edges induced on I); the task
// is one representation per graph, all assigning identical intervals to I.
//
// Solved FPT in l = |I|: enumerate the weak orders of the 2l endpoints of I
// (ties included, since closed intervals may touch or coincide), realize each
// order with integer coordinates, and try to extend that pre-drawn map in
// every graph.  Orders violating left <= right or the induced graph on I are
// pruned while still partial.

#include <algorithm>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "interval.hpp"
#include "rational.hpp"
#include "repext.hpp"

namespace irex {

struct SimRepInstance {
  std::vector<Graph> graphs;
  std::vector<std::string> names;            // shared vertices, in the order of the first header
  std::vector<std::vector<int>> shared_ids;  // [graph][shared index] -> vertex id
};

// Instance file: a line with the graph count, then per graph a header
// "shared name=id ..." naming its copies of the shared vertices, followed by
// the graph in the usual "n m" + edge-list format.  '#' starts a comment.
inline SimRepInstance parse_simrep_instance(std::istream& in) {
  std::vector<std::string> lines;
  {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (detail::blank_or_comment(line)) continue;
      lines.push_back(detail::strip_comment(line));
    }
  }
  std::size_t at = 0;
  auto next_line = [&]() -> const std::string& {
    if (at >= lines.size())
      throw parse_error(parse_error::Kind::MalformedLine, 0,
                        "unexpected end of instance file");
    return lines[at++];
  };

  long long k = 0;
  {
    std::istringstream ss(next_line());
    std::string extra;
    if (!(ss >> k) || (ss >> extra) || k < 1)
      throw parse_error(parse_error::Kind::BadHeader, 0,
                        "expected the number of graphs on the first line");
  }

  SimRepInstance inst;
  for (long long gi = 0; gi < k; ++gi) {
    std::istringstream head(next_line());
    std::string tag;
    if (!(head >> tag) || tag != "shared")
      throw parse_error(parse_error::Kind::BadHeader, 0,
                        "expected a 'shared name=id ...' line before each graph");
    std::vector<std::string> names;
    std::vector<int> ids;
    std::string tok;
    while (head >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
        throw parse_error(parse_error::Kind::MalformedLine, 0,
                          "bad shared mapping '" + tok + "'");
      std::string name = tok.substr(0, eq);
      long long id = 0;
      {
        std::istringstream is(tok.substr(eq + 1));
        std::string extra;
        if (!(is >> id) || (is >> extra) || id < 0)
          throw parse_error(parse_error::Kind::MalformedLine, 0,
                            "bad vertex id in '" + tok + "'");
      }
      if (std::find(names.begin(), names.end(), name) != names.end())
        throw parse_error(parse_error::Kind::DuplicateVertex, 0,
                          "shared vertex '" + name + "' mapped twice");
      if (std::find(ids.begin(), ids.end(), int(id)) != ids.end())
        throw parse_error(parse_error::Kind::DuplicateVertex, 0,
                          "vertex " + std::to_string(id) + " mapped twice");
      names.push_back(std::move(name));
      ids.push_back(int(id));
    }

    // The "n m" header tells how many edge lines belong to this graph.
    std::string header = next_line();
    long long n = 0, m = 0;
    {
      std::istringstream ss(header);
      std::string extra;
      if (!(ss >> n >> m) || (ss >> extra) || n < 0 || m < 0)
        throw parse_error(parse_error::Kind::BadHeader, 0,
                          "expected an 'n m' graph header");
    }
    std::string text = header + "\n";
    for (long long e = 0; e < m; ++e) text += next_line() + "\n";
    Graph g = load_graph(text);

    for (int id : ids)
      if (id >= g.n())
        throw parse_error(parse_error::Kind::IdOutOfRange, 0,
                          "shared vertex id " + std::to_string(id) +
                              " out of range in graph " + std::to_string(gi));

    if (gi == 0) {
      inst.names = names;
      inst.shared_ids.push_back(std::move(ids));
    } else {
      // Match by name against the canonical order of the first graph.
      if (names.size() != inst.names.size())
        throw parse_error(parse_error::Kind::BadHeader, 0,
                          "graphs disagree on the number of shared vertices");
      std::vector<int> mapped(inst.names.size(), -1);
      for (std::size_t i = 0; i < names.size(); ++i) {
        auto it = std::find(inst.names.begin(), inst.names.end(), names[i]);
        if (it == inst.names.end())
          throw parse_error(parse_error::Kind::BadHeader, 0,
                            "shared vertex '" + names[i] +
                                "' missing from the first graph");
        mapped[it - inst.names.begin()] = ids[i];
      }
      inst.shared_ids.push_back(std::move(mapped));
    }
    inst.graphs.push_back(std::move(g));
  }
  if (at != lines.size())
    throw parse_error(parse_error::Kind::MalformedLine, 0,
                      "trailing content after the last graph");
  return inst;
}

// Checks the promise that the graphs pairwise intersect exactly in I: every
// pair of shared vertices must be adjacent in either all graphs or none.
inline std::optional<std::string> validate_instance(const SimRepInstance& inst) {
  const std::size_t l = inst.names.size();
  for (std::size_t g = 0; g < inst.graphs.size(); ++g)
    if (inst.shared_ids[g].size() != l)
      return "internal shared-id table is inconsistent";
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) {
      bool base = inst.graphs[0].has_edge(inst.shared_ids[0][i], inst.shared_ids[0][j]);
      for (std::size_t g = 1; g < inst.graphs.size(); ++g) {
        bool here = inst.graphs[g].has_edge(inst.shared_ids[g][i], inst.shared_ids[g][j]);
        if (here != base)
          return "graphs disagree on the edge between shared vertices '" +
                 inst.names[i] + "' and '" + inst.names[j] + "'";
      }
    }
  return std::nullopt;
}

enum class SimRepStatus { Solved, NoSimRep, BoundExceeded, InvalidInstance };

struct SimRepResult {
  SimRepStatus status = SimRepStatus::NoSimRep;
  std::string reason;                  // BoundExceeded / InvalidInstance detail
  std::vector<Representation> reps;    // one per graph when solved
  Representation shared_rep;           // intervals of I, by shared index
};

namespace detail {

// Recursive enumeration of weak orders: each step picks the set of endpoints
// forming the next tie class (endpoint 2j is the left end of shared vertex j,
// 2j+1 its right end).  pos[] holds 1-based tie-class indices, 0 = unplaced.
struct SimRepSearch {
  const SimRepInstance& inst;
  std::vector<std::vector<char>> shared_adj;  // induced graph on I
  std::vector<int> pos;
  SimRepResult out;

  explicit SimRepSearch(const SimRepInstance& i) : inst(i) {
    const std::size_t l = inst.names.size();
    shared_adj.assign(l, std::vector<char>(l, 0));
    for (std::size_t a = 0; a < l; ++a)
      for (std::size_t b = 0; b < l; ++b)
        shared_adj[a][b] =
            a != b && inst.graphs[0].has_edge(inst.shared_ids[0][a], inst.shared_ids[0][b]);
    pos.assign(2 * l, 0);
  }

  // On closing vertex j, all its relations are decided: closed vertices
  // compare by coordinates, still-open ones overlap it, unopened ones never
  // will.  Any mismatch with the induced graph prunes the branch.
  bool close_ok(std::size_t j) const {
    const std::size_t l = inst.names.size();
    for (std::size_t i = 0; i < l; ++i) {
      if (i == j) continue;
      bool meets;
      if (pos[2 * i + 1] > 0)
        meets = pos[2 * i + 1] >= pos[2 * j] && pos[2 * j + 1] >= pos[2 * i];
      else
        meets = pos[2 * i] > 0;
      if (meets != bool(shared_adj[i][j])) return false;
    }
    return true;
  }

  bool run_trial() {
    const std::size_t l = inst.names.size();
    std::vector<Representation> reps;
    for (std::size_t g = 0; g < inst.graphs.size(); ++g) {
      PredrawnMap pre(inst.graphs[g].n());
      for (std::size_t j = 0; j < l; ++j)
        pre[inst.shared_ids[g][j]] =
            ClosedInterval(Rational(pos[2 * j]), Rational(pos[2 * j + 1]));
      auto res = extend(inst.graphs[g], pre);
      if (!res.extended) return false;
      reps.push_back(std::move(res.rep));
    }
    out.status = SimRepStatus::Solved;
    out.reps = std::move(reps);
    out.shared_rep.clear();
    for (std::size_t j = 0; j < l; ++j)
      out.shared_rep.push_back(
          ClosedInterval(Rational(pos[2 * j]), Rational(pos[2 * j + 1])));
    return true;
  }

  bool search(unsigned rem, int next_class) {
    if (rem == 0) return run_trial();
    for (unsigned sub = rem; sub; sub = (sub - 1) & rem) {
      bool ok = true;
      for (unsigned s = sub; s; s &= s - 1) {
        int e = __builtin_ctz(s);
        if ((e & 1) && pos[e - 1] == 0 && !(sub >> (e - 1) & 1)) {
          ok = false;  // right end before its left end
          break;
        }
      }
      if (!ok) continue;
      for (unsigned s = sub; s; s &= s - 1) pos[__builtin_ctz(s)] = next_class;
      for (unsigned s = sub; ok && s; s &= s - 1) {
        int e = __builtin_ctz(s);
        if (e & 1) ok = close_ok(std::size_t(e / 2));
      }
      if (ok && search(rem & ~sub, next_class + 1)) return true;
      for (unsigned s = sub; s; s &= s - 1) pos[__builtin_ctz(s)] = 0;
    }
    return false;
  }
};

}  // namespace detail

// Tries every weak order of the 2l shared endpoints until one extends in all
// graphs; the resulting representations agree on I verbatim.  Runs k
// extensions per order, so the total effort grows with the ordered Bell
// number of 2l — the bound keeps that in check.
inline SimRepResult simrep(const SimRepInstance& inst, int max_shared = 5) {
  SimRepResult res;
  if (inst.graphs.empty()) {
    res.status = SimRepStatus::InvalidInstance;
    res.reason = "instance has no graphs";
    return res;
  }
  if (auto why = validate_instance(inst)) {
    res.status = SimRepStatus::InvalidInstance;
    res.reason = *why;
    return res;
  }
  const int l = int(inst.names.size());
  if (l > max_shared || 2 * l >= 31) {
    res.status = SimRepStatus::BoundExceeded;
    res.reason = std::to_string(l) + " shared vertices exceed the bound of " +
                 std::to_string(std::min(max_shared, 15));
    return res;
  }
  detail::SimRepSearch search(inst);
  if (search.search((1u << (2 * l)) - 1, 1)) return search.out;
  res.status = SimRepStatus::NoSimRep;
  return res;
}

}  // namespace irex
