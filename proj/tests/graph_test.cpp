#include "krev/graph.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

namespace krev {
namespace {

ParseErrorKind parse_failure(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError &e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a parse error for: " << text;
  return ParseErrorKind::MissingHeader;
}

TEST(ParseEdgeList, PathOnThreeVertices) {
  auto g = parse_edge_list("n=3\n1 2\n2 3");
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.m(), 2);
  EXPECT_EQ(g.sorted_edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(ParseEdgeList, EightVertexFamilyFirstTree) {
  auto g = parse_edge_list("n=8\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n6 8\n");
  EXPECT_EQ(g.max_degree(), 3);
  EXPECT_EQ(g.degree(5), 3);
  EXPECT_TRUE(is_tree(g));
}

TEST(ParseEdgeList, CommentsAndWhitespace) {
  auto g = parse_edge_list("# a triangle\n\nn = 3\n1 2   # first\n  2\t3\n3 1\r\n");
  EXPECT_EQ(g.m(), 3);
  EXPECT_TRUE(g.adjacent(0, 2));
}

TEST(ParseEdgeList, HeaderOnly) {
  auto g = parse_edge_list("n=1\n");
  EXPECT_EQ(g.n(), 1);
  EXPECT_EQ(g.m(), 0);
}

TEST(ParseEdgeList, DistinctErrors) {
  EXPECT_EQ(parse_failure("n=2\n1 1"), ParseErrorKind::SelfLoop);
  EXPECT_EQ(parse_failure("n=3\n1 2\n2 1"), ParseErrorKind::DuplicateEdge);
  EXPECT_EQ(parse_failure("n=3\n1 4"), ParseErrorKind::IndexOutOfRange);
  EXPECT_EQ(parse_failure("n=3\n0 1"), ParseErrorKind::IndexOutOfRange);
  EXPECT_EQ(parse_failure("n=3\n1 x"), ParseErrorKind::MalformedLine);
  EXPECT_EQ(parse_failure("n=3\n1 2 3"), ParseErrorKind::MalformedLine);
  EXPECT_EQ(parse_failure("n=3\n12"), ParseErrorKind::MalformedLine);
  EXPECT_EQ(parse_failure("1 2\n"), ParseErrorKind::MissingHeader);
  EXPECT_EQ(parse_failure(""), ParseErrorKind::MissingHeader);
  EXPECT_EQ(parse_failure("n=0"), ParseErrorKind::MalformedLine);
}

TEST(ParseEdgeList, ErrorCarriesLineNumber) {
  try {
    parse_edge_list("n=3\n1 2\n# note\n2 2\n");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(Graph, RejectsInvalidConstruction) {
  EXPECT_THROW(Graph(0, {}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST(Graph, DegreeInvariants) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = test::random_connected_graph(2 + trial % 30, 0.2, rng);
    int sum = 0, mx = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      sum += g.degree(v);
      mx = std::max(mx, g.degree(v));
      int row_count = 0;
      for (auto w : g.row(v)) row_count += std::popcount(w);
      EXPECT_EQ(row_count, g.degree(v));
    }
    EXPECT_EQ(sum, 2 * g.m());
    EXPECT_EQ(mx, g.max_degree());
  }
}

TEST(Graph, WideGraphsUseSeveralWords) {
  auto g = test::path_graph(130);
  EXPECT_EQ(g.words(), 3);
  EXPECT_TRUE(g.adjacent(64, 65));
  EXPECT_TRUE(g.adjacent(127, 128));
  EXPECT_FALSE(g.adjacent(0, 129));
}

TEST(IsTree, Examples) {
  EXPECT_TRUE(is_tree(test::path_graph(3)));
  EXPECT_TRUE(is_tree(Graph(1, {})));
  EXPECT_FALSE(is_tree(test::graph1(3, {{1, 2}, {2, 3}, {1, 3}})));
  EXPECT_FALSE(is_tree(test::graph1(4, {{1, 2}, {3, 4}})));
  EXPECT_FALSE(is_tree(test::graph1(4, {{1, 2}, {2, 3}, {1, 3}})));
}

TEST(EdgeList, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = test::random_connected_graph(1 + trial % 40, 0.15, rng);
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
    EXPECT_EQ(graph_from_edges_string(g.n(), edges_string(g)), g);
  }
}

TEST(EdgeList, CompactForm) {
  EXPECT_EQ(edges_string(test::family8_t1()), "1-2 2-3 3-4 4-5 5-6 6-7 6-8");
  EXPECT_THROW(graph_from_edges_string(3, "1-2 2_3"), ParseError);
}

} // namespace
} // namespace krev
