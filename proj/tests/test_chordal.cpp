#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "irex/chordal.hpp"
#include "irex/oracle.hpp"
#include "irex/selfcheck.hpp"

using irex::CliqueList;
using irex::Graph;
using irex::NotChordal;

namespace {
std::set<std::vector<int>> clique_set(const std::vector<std::vector<int>>& cl) {
  std::set<std::vector<int>> out;
  for (auto c : cl) {
    std::sort(c.begin(), c.end());
    out.insert(c);
  }
  return out;
}
}  // namespace

TEST_CASE("lex_bfs covers every vertex once") {
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
  auto order = irex::lex_bfs(g);
  REQUIRE(order.size() == 6);
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 6; ++i) CHECK(sorted[i] == i);
}

TEST_CASE("maximal_cliques on known graphs") {
  // Path: each edge is a maximal clique.
  Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  auto res = irex::maximal_cliques(p4);
  REQUIRE(std::holds_alternative<CliqueList>(res));
  const auto& cl = std::get<CliqueList>(res);
  CHECK(clique_set(cl.cliques) ==
        clique_set({{0, 1}, {1, 2}, {2, 3}}));

  // member_of lists exactly the cliques containing each vertex.
  for (int v = 0; v < 4; ++v) {
    for (int a = 0; a < int(cl.cliques.size()); ++a) {
      bool in = std::find(cl.cliques[a].begin(), cl.cliques[a].end(), v) !=
                cl.cliques[a].end();
      bool listed = std::find(cl.member_of[v].begin(), cl.member_of[v].end(),
                              a) != cl.member_of[v].end();
      CHECK(in == listed);
    }
  }

  Graph tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  res = irex::maximal_cliques(tri);
  REQUIRE(std::holds_alternative<CliqueList>(res));
  CHECK(std::get<CliqueList>(res).cliques.size() == 1);

  // Isolated vertices form singleton cliques.
  res = irex::maximal_cliques(Graph(3));
  REQUIRE(std::holds_alternative<CliqueList>(res));
  CHECK(std::get<CliqueList>(res).cliques.size() == 3);

  res = irex::maximal_cliques(Graph(0));
  REQUIRE(std::holds_alternative<CliqueList>(res));
  CHECK(std::get<CliqueList>(res).cliques.empty());
}

TEST_CASE("non-chordal graphs are reported") {
  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto res = irex::maximal_cliques(c4);
  REQUIRE(std::holds_alternative<NotChordal>(res));
  int w = std::get<NotChordal>(res).witness;
  CHECK((0 <= w && w < 4));

  Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  CHECK(std::holds_alternative<NotChordal>(irex::maximal_cliques(c6)));
  CHECK(irex::check_chordal(c6).has_value());
  CHECK(!irex::check_chordal(Graph::from_edges(3, {{0, 1}, {1, 2}})).has_value());
}

TEST_CASE("chordality and cliques agree with brute force") {
  irex::selfcheck::Rng rng(20240817);
  for (int it = 0; it < 300; ++it) {
    int n = 1 + irex::selfcheck::rnd(rng, 8);
    Graph g = irex::selfcheck::random_graph(rng, n, 50);
    auto res = irex::maximal_cliques(g);
    bool chordal = std::holds_alternative<CliqueList>(res);
    REQUIRE(chordal == irex::oracle::brute_is_chordal(g));
    if (!chordal) continue;
    const auto& cl = std::get<CliqueList>(res);
    CHECK(clique_set(cl.cliques) ==
          clique_set(irex::oracle::brute_maximal_cliques(g)));
    CHECK(cl.cliques.size() <= std::size_t(n));
  }
}
