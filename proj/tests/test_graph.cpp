#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "irex/graph.hpp"

using irex::Graph;
using irex::load_graph;
using irex::parse_error;

namespace {
Graph parse(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}
}  // namespace

TEST_CASE("load_graph basic") {
  Graph g = parse("4 3\n0 1\n1 2\n2 3\n");
  CHECK(g.n() == 4);
  CHECK(g.m() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(2, 3));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 1);
}

TEST_CASE("load_graph comments and blank lines") {
  Graph g = parse("# triangle\n3 3\n\n0 1\n1 2   # last two\n0 2\n");
  CHECK(g.n() == 3);
  CHECK(g.m() == 3);
  CHECK(g.has_edge(0, 2));
}

TEST_CASE("load_graph rejects bad input") {
  auto kind_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const parse_error& e) {
      return e.kind();
    }
    return parse_error::Kind::MalformedLine;  // unreachable for these cases
  };
  CHECK(kind_of("2 1\n0 0\n") == parse_error::Kind::SelfLoop);
  CHECK(kind_of("2 2\n0 1\n1 0\n") == parse_error::Kind::DuplicateEdge);
  CHECK(kind_of("2 1\n0 5\n") == parse_error::Kind::IdOutOfRange);
  CHECK(kind_of("2 1\n0 -1\n") == parse_error::Kind::IdOutOfRange);
  CHECK(kind_of("-1 0\n") == parse_error::Kind::BadHeader);
  CHECK_THROWS_AS(parse("2 1\nzero one\n"), parse_error);
  CHECK_THROWS_AS(parse("2 1\n"), parse_error);            // missing edge
  CHECK_THROWS_AS(parse("2 1\n0 1\n0 1\n"), parse_error);  // extra edge
  CHECK_THROWS_AS(parse(""), parse_error);                 // no header
}

TEST_CASE("graph round trip and equality") {
  Graph g = parse("5 4\n0 1\n1 2\n2 3\n3 4\n");
  std::istringstream in(irex::format_graph(g));
  Graph h = load_graph(in);
  CHECK(g == h);
  Graph k = Graph::from_edges(5, {{1, 0}, {2, 1}, {3, 2}, {4, 3}});
  CHECK(g == k);
  Graph diff = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(!(g == diff));
}

TEST_CASE("neighbors are sorted, duplicate edges rejected") {
  Graph g = Graph::from_edges(4, {{2, 0}, {0, 1}, {3, 0}});
  auto nb = g.neighbors(0);
  REQUIRE(nb.size() == 3);
  CHECK(nb[0] == 1);
  CHECK(nb[1] == 2);
  CHECK(nb[2] == 3);
  CHECK(g.edges().size() == 3);
  CHECK_THROWS(Graph::from_edges(3, {{0, 1}, {1, 0}}));
  CHECK_THROWS(Graph::from_edges(3, {{1, 1}}));
}

TEST_CASE("empty and edgeless graphs") {
  Graph g = parse("0 0\n");
  CHECK(g.n() == 0);
  CHECK(g.m() == 0);
  Graph h = parse("3 0\n");
  CHECK(h.n() == 3);
  CHECK(h.degree(0) == 0);
}
