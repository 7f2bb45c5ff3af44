#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include "irex/oracle.hpp"
#include "irex/repext.hpp"
#include "irex/selfcheck.hpp"

using irex::ClosedInterval;
using irex::Extended;
using irex::ExtendFail;
using irex::Graph;
using irex::PredrawnMap;
using irex::Rational;

namespace {
ClosedInterval iv(int l, int r) {
  return ClosedInterval(Rational(l), Rational(r));
}
}  // namespace

TEST_CASE("load_partial") {
  std::istringstream in("0 0 2\n2 1/2 5\n# comment\n");
  auto pre = irex::load_partial(in, 3);
  REQUIRE(pre.size() == 3);
  REQUIRE(pre[0]);
  CHECK(!pre[1]);
  CHECK(pre[2]->left == Rational(1, 2));

  std::istringstream bad1("5 0 1\n");
  CHECK_THROWS_AS(irex::load_partial(bad1, 3), irex::parse_error);
  std::istringstream bad2("0 0 1\n0 2 3\n");
  CHECK_THROWS_AS(irex::load_partial(bad2, 3), irex::parse_error);
  std::istringstream bad3("0 4 1\n");
  CHECK_THROWS_AS(irex::load_partial(bad3, 3), irex::parse_error);
}

TEST_CASE("build_parts counts open intervals per part") {
  PredrawnMap pre(2);
  pre[0] = iv(0, 2);
  pre[1] = iv(1, 5);
  auto parts = irex::build_parts(pre);
  REQUIRE(parts.coord.size() == 4);  // 0 1 2 5
  CHECK(parts.coord[0] == Rational(0));
  CHECK(parts.coord[3] == Rational(5));
  CHECK(parts.cnt_between == std::vector<int>{0, 1, 2, 1, 0});
  CHECK(parts.cnt_at == std::vector<int>{1, 2, 2, 1});

  auto none = irex::build_parts(PredrawnMap(4));
  CHECK(none.coord.empty());
  CHECK(none.cnt_between == std::vector<int>{0});
}

TEST_CASE("sweep_constraints hulls") {
  // Single edge 0-1, both pre-drawn: the clique lives on [1,2].
  Graph g = Graph::from_edges(2, {{0, 1}});
  PredrawnMap pre(2);
  pre[0] = iv(0, 2);
  pre[1] = iv(1, 5);
  auto cl = std::get<irex::CliqueList>(irex::maximal_cliques(g));
  REQUIRE(cl.cliques.size() == 1);
  auto cons = irex::sweep_constraints(irex::build_parts(pre), cl, pre);
  CHECK(cons[0].count == 2);
  CHECK(cons[0].lstar == Extended(Rational(1)));
  CHECK(cons[0].rstar == Extended(Rational(2)));
  REQUIRE(cons[0].region);
  CHECK(cons[0].region->first == Extended(Rational(1)));
  CHECK(cons[0].region->second == Extended(Rational(2)));

  // Two non-adjacent pre-drawn vertices: each singleton clique keeps its
  // own interval as the hull.
  Graph h(2);
  PredrawnMap ph(2);
  ph[0] = iv(0, 2);
  ph[1] = iv(3, 5);
  auto clh = std::get<irex::CliqueList>(irex::maximal_cliques(h));
  auto conh = irex::sweep_constraints(irex::build_parts(ph), clh, ph);
  REQUIRE(conh.size() == 2);
  for (std::size_t a = 0; a < 2; ++a) {
    REQUIRE(conh[a].region);
    int v = clh.cliques[a][0];
    CHECK(conh[a].region->first == Extended(ph[v]->left));
    CHECK(conh[a].region->second == Extended(ph[v]->right));
  }
}

TEST_CASE("extend reports invalid partials before anything else") {
  // Adjacent but drawn disjoint.
  Graph g = Graph::from_edges(2, {{0, 1}});
  PredrawnMap pre(2);
  pre[0] = iv(0, 1);
  pre[1] = iv(2, 3);
  auto res = irex::extend(g, pre);
  CHECK(!res.extended);
  CHECK(res.fail == ExtendFail::InvalidPartial);
  CHECK(res.reason.find("disjoint") != std::string::npos);

  // Intersecting but non-adjacent.
  Graph h(2);
  PredrawnMap ph(2);
  ph[0] = iv(0, 4);
  ph[1] = iv(1, 3);
  res = irex::extend(h, ph);
  CHECK(!res.extended);
  CHECK(res.fail == ExtendFail::InvalidPartial);
  CHECK(res.reason.find("intersect") != std::string::npos);

  // A bad partial wins over a non-interval graph: checked first.
  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  PredrawnMap pc(4);
  pc[0] = iv(0, 1);
  pc[1] = iv(5, 6);  // edge 0-1 drawn disjoint
  res = irex::extend(c4, pc);
  CHECK(res.fail == ExtendFail::InvalidPartial);
}

TEST_CASE("extend recognizes non-interval graphs") {
  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto res = irex::extend(c4, PredrawnMap(4));
  CHECK(!res.extended);
  CHECK(res.fail == ExtendFail::NotInterval);
  CHECK(res.reason.find("chordal") != std::string::npos);

  // The net is chordal but has no consecutive clique ordering.
  Graph net = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  res = irex::extend(net, PredrawnMap(6));
  CHECK(!res.extended);
  CHECK(res.fail == ExtendFail::NotInterval);
  CHECK(res.reason.find("consecutive") != std::string::npos);
}

TEST_CASE("extend detects an unplaceable clique") {
  // 1's interval is swallowed by 0's, leaving no room for a clique that
  // must meet 1 but avoid 0.
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
  PredrawnMap pre(3);
  pre[0] = iv(0, 10);
  pre[1] = iv(2, 3);
  auto res = irex::extend(g, pre);
  CHECK(!res.extended);
  CHECK(res.fail == ExtendFail::NotExtendible);
  CHECK(res.reason.find("no feasible position") != std::string::npos);
}

TEST_CASE("extend detects an impossible clique order") {
  // u-v, v-w with a pinned isolated z between them: v's two cliques would
  // have to surround z's clique, splitting them.
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}});
  PredrawnMap pre(4);
  pre[0] = iv(0, 1);
  pre[2] = iv(3, 4);
  pre[3] = ClosedInterval(Rational(3, 2), Rational(5, 2));
  auto res = irex::extend(g, pre);
  CHECK(!res.extended);
  CHECK(res.fail == ExtendFail::NotExtendible);
  CHECK(!irex::oracle::brute_extend(g, pre));

  // Dropping z makes it extendible again.
  PredrawnMap relaxed(4);
  relaxed[0] = pre[0];
  relaxed[2] = pre[2];
  auto ok = irex::extend(g, relaxed);
  CHECK(ok.extended);
  CHECK(ok.fail == ExtendFail::None);
}

TEST_CASE("two stars with pre-drawn centers extend") {
  Graph stars = Graph::from_edges(6, {{0, 2}, {0, 3}, {1, 4}, {1, 5}});
  PredrawnMap pre(6);
  pre[0] = iv(0, 1);
  pre[1] = iv(2, 3);
  auto res = irex::extend(stars, pre);
  REQUIRE(res.extended);
  // Pre-drawn intervals are kept verbatim.
  CHECK(res.rep[0] == *pre[0]);
  CHECK(res.rep[1] == *pre[1]);
  CHECK(irex::verify_extension(stars, pre, res.rep).ok);
  // Every clique through center 0 sits left of every clique through 1.
  auto has = [&](std::size_t a, int v) {
    const auto& c = res.cliques.cliques[a];
    return std::find(c.begin(), c.end(), v) != c.end();
  };
  for (std::size_t a = 0; a < res.cliques.cliques.size(); ++a)
    for (std::size_t b = 0; b < res.cliques.cliques.size(); ++b)
      if (has(a, 0) && has(b, 1)) CHECK(res.clique_point[a] < res.clique_point[b]);
}

TEST_CASE("recognition places free cliques at 1,2,3,...") {
  Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  auto res = irex::recognize(p4);
  REQUIRE(res.extended);
  REQUIRE(res.clique_order.size() == 3);
  for (int i = 0; i < 3; ++i)
    CHECK(res.clique_point[res.clique_order[i]] == Rational(i + 1));
  // Middle vertices span their two clique points.
  CHECK(res.rep[1].right - res.rep[1].left == Rational(1));
}

TEST_CASE("pinned cliques spread evenly inside one part") {
  // Three leaves hanging off one pre-drawn interval [0,10]: their cliques
  // all need count one, landing on 0 and then evenly inside (0,10).
  Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  PredrawnMap pre(4);
  pre[0] = iv(0, 10);
  auto res = irex::extend(g, pre);
  REQUIRE(res.extended);
  std::vector<Rational> pts = res.clique_point;
  std::sort(pts.begin(), pts.end());
  CHECK(pts == std::vector<Rational>{Rational(0), Rational(10, 3), Rational(20, 3)});
}

TEST_CASE("degenerate inputs") {
  auto res = irex::extend(Graph(0), PredrawnMap(0));
  CHECK(res.extended);
  CHECK(res.rep.empty());

  Graph one(1);
  PredrawnMap pre(1);
  pre[0] = iv(5, 7);
  res = irex::extend(one, pre);
  REQUIRE(res.extended);
  CHECK(res.rep[0] == iv(5, 7));

  CHECK_THROWS_AS(irex::extend(Graph(2), PredrawnMap(1)), std::invalid_argument);
}

TEST_CASE("extend matches the brute-force oracle") {
  auto failure = irex::selfcheck::check_extend(424242, 600);
  INFO(failure.value_or(""));
  CHECK(!failure);
}

TEST_CASE("recognize matches the brute-force oracle") {
  auto failure = irex::selfcheck::check_recognize(313131, 400);
  INFO(failure.value_or(""));
  CHECK(!failure);
}
