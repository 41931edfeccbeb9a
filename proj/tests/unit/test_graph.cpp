#include <gtest/gtest.h>

#include <random>

#include "elc/code.hpp"
#include "elc/errors.hpp"
#include "elc/graph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace elc;
using fixtures::graph1;

TEST(Graph, RejectsBadInput) {
  const std::vector<Edge> loop{{0, 0}};
  EXPECT_THROW(Graph::from_edges(3, loop), InvalidArgument);
  const std::vector<Edge> twice{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph::from_edges(3, twice), InvalidArgument);
  const std::vector<Edge> out_of_range{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, out_of_range), InvalidArgument);
  const std::vector<Row> asymmetric{0b10, 0b00};
  EXPECT_THROW(Graph::from_rows(2, asymmetric), InvalidArgument);
  const std::vector<Row> diagonal{0b01};
  EXPECT_THROW(Graph::from_rows(1, diagonal), InvalidArgument);
  const std::vector<Row> high_bit{0b110, 0b001, 0b001};
  EXPECT_THROW(Graph::from_rows(2, std::span(high_bit).first(2)), InvalidArgument);
  EXPECT_THROW(Graph(65), InvalidArgument);
}

TEST(Graph, RowsAreSymmetric) {
  const Graph g = fixtures::hamming_graph();
  for (int i = 0; i < 7; ++i) {
    EXPECT_FALSE(g.adjacent(i, i));
    for (int j = 0; j < 7; ++j) EXPECT_EQ(g.adjacent(i, j), g.adjacent(j, i));
  }
  EXPECT_EQ(g.edge_count(), 9);
}

TEST(LocalComplement, LowDegreeIsNoOp) {
  const Graph p = fixtures::path(4);
  EXPECT_EQ(local_complement(p, 0), p);
  EXPECT_EQ(local_complement(p, 3), p);
  EXPECT_EQ(local_complement(Graph(3), 1), Graph(3));
}

TEST(LocalComplement, StarBecomesComplete) {
  EXPECT_EQ(local_complement(fixtures::star(3), 0), fixtures::complete(4));
}

TEST(LocalComplement, InvolutionOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + int(rng() % 12), 0.5);
    const int v = int(rng() % g.order());
    EXPECT_EQ(local_complement(local_complement(g, v), v), g);
    EXPECT_EQ(oracle::to_mat(local_complement(g, v)), oracle::lc(oracle::to_mat(g), v));
  }
}

TEST(Elc, PathBecomesLabeledCycle) {
  const Graph p4 = fixtures::path(4);
  const Graph expected = graph1(4, {{1, 3}, {2, 3}, {2, 4}, {1, 4}});
  EXPECT_EQ(elc_via_lc(p4, {1, 2}), expected);
  EXPECT_EQ(elc_classes(p4, {1, 2}), expected);
  EXPECT_EQ(pivot_bipartite(p4, {1, 2}), expected);
  EXPECT_EQ(oracle::from_mat(oracle::elc(oracle::to_mat(p4), 1, 2)), expected);
}

TEST(Elc, K2IsFixed) {
  const Graph k2 = fixtures::complete(2);
  EXPECT_EQ(elc_via_lc(k2, {0, 1}), k2);
  EXPECT_EQ(elc_classes(k2, {0, 1}), k2);
  EXPECT_EQ(pivot_bipartite(k2, {0, 1}), k2);
}

TEST(Elc, HammingEdge27) {
  const Graph g = fixtures::hamming_graph();
  const Edge e{1, 6};
  // Toggled graph is the graph of C'; ELC also exchanges labels 2 and 7.
  const Graph toggled = code_to_graph(fixtures::hamming_swapped()).graph;
  const Graph expected = toggled.with_swapped_labels(1, 6);
  EXPECT_EQ(elc_toggle_only(g, e), toggled);
  EXPECT_EQ(elc_classes(g, e), expected);
  EXPECT_EQ(elc_via_lc(g, e), expected);
  EXPECT_EQ(pivot_bipartite(g, e), expected);
  // {1,5} added, {4,5} removed.
  EXPECT_TRUE(toggled.adjacent(0, 4));
  EXPECT_FALSE(toggled.adjacent(3, 4));
  EXPECT_EQ(toggled.edge_count(), g.edge_count());
}

TEST(Elc, TriangleWithPendantTogglesClassCAgainstA) {
  // u=1, v=2, w=3 (class C), x=4 pendant on u (class A).
  const Graph g = graph1(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}});
  const Graph h = elc_classes(g, {0, 1});
  EXPECT_EQ(h, graph1(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(h, elc_via_lc(g, {0, 1}));
  EXPECT_THROW(pivot_bipartite(g, {0, 1}), InvalidArgument);
}

TEST(Elc, RequiresAnEdge) {
  EXPECT_THROW(elc_classes(fixtures::path(3), {0, 2}), InvalidArgument);
  EXPECT_THROW(elc_via_lc(fixtures::path(3), {0, 5}), InvalidArgument);
  EXPECT_THROW(elc_classes(fixtures::path(3), {1, 1}), InvalidArgument);
}

TEST(Elc, BipartiteMatchesClassesOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const int a = 1 + int(rng() % 6);
    const int b = 1 + int(rng() % 6);
    const Graph g = oracle::random_connected_bipartite(rng, a, b, 0.4);
    for (const Edge e : g.edges()) {
      ASSERT_EQ(pivot_bipartite(g, e), elc_classes(g, e));
      // Class C is empty: no common neighbor of u and v.
      ASSERT_EQ(g.neighbors(e.u) & g.neighbors(e.v), 0u);
    }
  }
}

TEST(Connectivity, Basics) {
  EXPECT_TRUE(is_connected(fixtures::complete(2)));
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_TRUE(is_connected(fixtures::hamming_graph()));
  EXPECT_TRUE(is_connected(Graph(1)));
  const Graph g = graph1(5, {{1, 2}, {4, 5}});
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(comps[1], (std::vector<int>{2}));
  EXPECT_EQ(comps[2], (std::vector<int>{3, 4}));
}

TEST(Bipartition, Examples) {
  const auto c = bipartition(fixtures::hamming_graph());
  ASSERT_TRUE(c);
  EXPECT_EQ(c->left_mask(), 0b0001111u);
  EXPECT_EQ(c->right_mask(), 0b1110000u);
  EXPECT_FALSE(bipartition(fixtures::complete(3)));
  const auto edgeless = bipartition(Graph(3));
  ASSERT_TRUE(edgeless);
  EXPECT_EQ(edgeless->right_mask(), 0u);
}

TEST(Bipartition, ColoringHelpers) {
  const Coloring c = fixtures::hamming_coloring();
  EXPECT_EQ(c.count(Side::kLeft), 4);
  EXPECT_EQ(c.count(Side::kRight), 3);
  EXPECT_EQ(c.swapped().left_mask(), 0b1110000u);
  const Coloring d = c.with_swapped_vertices(1, 6);
  EXPECT_EQ(d.side(1), Side::kRight);
  EXPECT_EQ(d.side(6), Side::kLeft);
  EXPECT_TRUE(is_proper_coloring(fixtures::hamming_graph(), c));
  EXPECT_FALSE(is_proper_coloring(fixtures::hamming_graph(), c.with_swapped_vertices(0, 4)));
}

TEST(Graph, RelabelAndInducedSubgraph) {
  const Graph p = fixtures::path(3);
  const std::vector<int> perm{2, 0, 1};
  const Graph q = p.relabeled(perm);
  EXPECT_TRUE(q.adjacent(2, 0));
  EXPECT_TRUE(q.adjacent(0, 1));
  EXPECT_FALSE(q.adjacent(2, 1));
  const std::vector<int> keep{0, 1};
  EXPECT_EQ(induced_subgraph(p, keep), fixtures::complete(2));
  EXPECT_EQ(p.with_added_vertex(0b100), fixtures::path(4));
}
