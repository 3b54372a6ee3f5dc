#include <gtest/gtest.h>

#include <set>

#include <sdclique/graph.hpp>
#include <sdclique/rng.hpp>

#include "test_util.hpp"

using namespace sdc;

TEST(Graph, ParsesTriangleWithComments) {
  const Graph g = parse_dimacs("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.comp_count(), 0u);
}

TEST(Graph, AcceptsCrlfAndExtraWhitespace) {
  const Graph g = parse_dimacs("p  edge   4 2\r\n  e 1   2 \r\ne\t3 4\r\n\r\n");
  EXPECT_EQ(g.n(), 4u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_FALSE(g.adjacent(1, 2));
}

TEST(Graph, DuplicateAndReversedEdgesCollapse) {
  const Graph g = parse_dimacs("p edge 3 4\ne 1 2\ne 2 1\ne 1 2\ne 2 3\n");
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(parse_dimacs("e 1 2\n"), parse_error);              // edge before header
  EXPECT_THROW(parse_dimacs("p edge 3 1\ne 1 4\n"), parse_error);  // out of range
  EXPECT_THROW(parse_dimacs("p edge 3 1\ne 0 1\n"), parse_error);  // 1-based
  EXPECT_THROW(parse_dimacs("p edge 3 1\ne 2 2\n"), parse_error);  // self loop
  EXPECT_THROW(parse_dimacs("p edge 3 1\ne 1 x\n"), parse_error);
  EXPECT_THROW(parse_dimacs("c nothing here\n"), parse_error);
  EXPECT_THROW(parse_dimacs("p edge 3 1\np edge 3 1\n"), parse_error);
}

TEST(Graph, ParseErrorReportsLine) {
  try {
    parse_dimacs("c x\np edge 3 1\ne 1 9\n");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Graph, ComplementIndexIsLexicographic) {
  // path 1-2-3-4: missing pairs (1,3), (1,4), (2,4) in that order
  const Graph g = parse_dimacs("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
  ASSERT_EQ(g.comp_count(), 3u);
  EXPECT_EQ(g.comp_edges()[0], (Edge{0, 2}));
  EXPECT_EQ(g.comp_edges()[1], (Edge{0, 3}));
  EXPECT_EQ(g.comp_edges()[2], (Edge{1, 3}));
  EXPECT_EQ(g.comp_index(3, 1), 2u);
  EXPECT_EQ(g.comp_index(0, 1), no_edge);
  EXPECT_EQ(g.comp_index(2, 2), no_edge);
}

TEST(Graph, ComplementIndexMatchesEnumeration) {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 3 + rng.below(15);
    const Graph g = random_graph(n, 0.5, rng);
    std::vector<Edge> expect;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (!g.adjacent(i, j))
          expect.push_back({i, j});
    ASSERT_EQ(g.comp_edges(), expect);
    for (EdgeIndex e = 0; e < expect.size(); ++e) {
      EXPECT_EQ(g.comp_index(expect[e].u, expect[e].v), e);
      EXPECT_EQ(g.comp_index(expect[e].v, expect[e].u), e);
    }
    std::size_t comp_nbr_total = 0;
    for (Vertex i = 0; i < n; ++i) {
      comp_nbr_total += g.comp_neighbors(i).size();
      for (const auto& [j, e] : g.comp_neighbors(i))
        EXPECT_EQ(g.comp_index(i, j), e);
    }
    EXPECT_EQ(comp_nbr_total, 2 * expect.size());
    EXPECT_EQ(g.edge_count() + g.comp_count(), n * (n - 1) / 2);
  }
}

TEST(Graph, RoundTripThroughWriter) {
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_graph(2 + rng.below(20), 0.4, rng);
    EXPECT_EQ(parse_dimacs(to_dimacs(g, "round trip")), g);
  }
}

TEST(Graph, MissingEdgeCountMatchesPairs) {
  const Graph g = parse_dimacs("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
  const std::vector<Vertex> all{0, 1, 2, 3};
  EXPECT_EQ(missing_edge_count(g, all), 3u);
  const std::vector<Vertex> pair{0, 1};
  EXPECT_EQ(missing_edge_count(g, pair), 0u);
  EXPECT_EQ(max_degree(g), 2u);
}

TEST(Graph, HammingInstanceHasPublishedSize) {
  const Graph g = load_dimacs(test::data_file("hamming6-2.clq"));
  EXPECT_EQ(g.n(), 64u);
  EXPECT_EQ(g.edge_count(), 1824u);
}

TEST(Graph, LoadMissingFileThrows) { EXPECT_THROW(load_dimacs("/nonexistent/graph.clq"), std::runtime_error); }

TEST(Rng, SeedsAreReproducibleAndDistinct) {
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i)
    EXPECT_EQ(a.uniform(), b.uniform());
  std::set<std::uint64_t> seeds;
  for (std::uint64_t r = 0; r < 1000; ++r)
    seeds.insert(run_seed(42, r));
  EXPECT_EQ(seeds.size(), 1000u);
  Rng c(9);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform();
    EXPECT_GT(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(c.below(7), 7u);
  }
}
