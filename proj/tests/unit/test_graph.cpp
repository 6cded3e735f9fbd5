#include <gtest/gtest.h>

#include <stdexcept>

#include "gcolor/graph.hpp"
#include "oracles.hpp"

using namespace gcolor;

namespace {

Graph edgeless(std::size_t n) { return Graph(n, {}); }

}  // namespace

TEST(Graph, Triangle) {
  const Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.num_vertices(), 3U);
  EXPECT_EQ(g.num_edges(), 3U);
  EXPECT_EQ(g, Graph::complete(3));
}

TEST(Graph, EdgelessAndDuplicates) {
  EXPECT_EQ(edgeless(4).num_edges(), 0U);
  const Graph g(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(g.num_edges(), 1U);
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(Graph, RejectsSelfLoopAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST(Graph, ZeroVertices) {
  const Graph g(0, {});
  EXPECT_EQ(g.num_vertices(), 0U);
  EXPECT_TRUE(is_independent(g, {}));
  EXPECT_TRUE(is_bipartite(g));
  EXPECT_EQ(induced_subgraph(g, {}).graph.num_vertices(), 0U);
}

TEST(Graph, Neighbors) {
  EXPECT_EQ(neighbors(Graph::complete(3), 0), (VertexSet{1, 2}));
  EXPECT_TRUE(neighbors(edgeless(4), 2).empty());
  EXPECT_EQ(neighbors(Graph::path(3), 1), (VertexSet{0, 2}));
  EXPECT_THROW(neighbors(Graph::path(3), 3), std::out_of_range);
}

TEST(Graph, NonNeighborhood) {
  EXPECT_TRUE(non_neighborhood(Graph::complete(3), {0}).empty());
  EXPECT_EQ(non_neighborhood(edgeless(4), {0}), (VertexSet{1, 2, 3}));
  EXPECT_EQ(non_neighborhood(Graph::path(4), {0}), (VertexSet{2, 3}));
}

TEST(Graph, InducedSubgraph) {
  const Subgraph k = induced_subgraph(Graph::complete(3), {0, 1});
  EXPECT_EQ(k.graph, Graph(2, {{0, 1}}));

  const Subgraph p = induced_subgraph(Graph::path(4), {0, 2, 3});
  EXPECT_EQ(p.graph.num_edges(), 1U);
  EXPECT_EQ(p.parent_ids, (std::vector<Vertex>{0, 2, 3}));
  // Local edge (1,2) is parent edge (2,3).
  EXPECT_TRUE(p.graph.adjacent(1, 2));
  EXPECT_EQ(p.to_parent({1, 2}), (VertexSet{2, 3}));

  EXPECT_EQ(induced_subgraph(Graph::complete(5), {}).graph.num_vertices(), 0U);
  EXPECT_THROW(induced_subgraph(Graph::path(3), {5}), std::out_of_range);
}

TEST(Graph, IndependentAndClique) {
  const Graph k3 = Graph::complete(3);
  EXPECT_FALSE(is_independent(k3, {0, 1}));
  EXPECT_TRUE(is_independent(k3, {0}));
  EXPECT_TRUE(is_independent(edgeless(4), {0, 1, 2, 3}));
  EXPECT_TRUE(is_clique(k3, {0, 1, 2}));
  EXPECT_FALSE(is_clique(Graph::path(3), {0, 2}));
  for (Vertex v = 0; v < 3; ++v) EXPECT_TRUE(is_clique(Graph::path(3), {v}));
}

TEST(Graph, ProperColoring) {
  const Graph k3 = Graph::complete(3);
  EXPECT_TRUE(is_proper_coloring(k3, Coloring({0, 1, 2})));
  EXPECT_FALSE(is_proper_coloring(k3, Coloring({0, 0, 1})));
  EXPECT_TRUE(is_proper_coloring(edgeless(4), Coloring({0, 0, 0, 0})));
  EXPECT_THROW(is_proper_coloring(k3, Coloring({0, -1, 1})), std::invalid_argument);
  EXPECT_THROW(is_proper_coloring(k3, Coloring({0, 1})), std::invalid_argument);
}

TEST(Graph, Bipartite) {
  EXPECT_TRUE(is_bipartite(Graph::cycle(4)));
  EXPECT_FALSE(is_bipartite(Graph::complete(3)));
  EXPECT_TRUE(is_bipartite(edgeless(5)));
  EXPECT_FALSE(is_bipartite(Graph::cycle(5)));
}

TEST(Coloring, DenseRenumberingKeepsOrder) {
  const Coloring c({4, 9, 4, 2});
  EXPECT_EQ(c.assignment(), (std::vector<int>{1, 2, 1, 0}));
  EXPECT_EQ(c.num_colors(), 3);
  EXPECT_TRUE(c.is_total());
  EXPECT_FALSE(Coloring({0, -3}).is_total());
}

TEST(Coloring, FromClasses) {
  const std::vector<VertexSet> classes{{2, 0}, {1}, {3}};
  const Coloring c = Coloring::from_classes(4, classes);
  EXPECT_EQ(c.assignment(), (std::vector<int>{0, 1, 0, 2}));
  EXPECT_EQ(c.classes(), classes);
}

TEST(VertexSet, SetOperations) {
  const VertexSet a{3, 1, 1, 2};
  EXPECT_EQ(a.members(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(a.united({5, 1}), (VertexSet{1, 2, 3, 5}));
  EXPECT_EQ(a.minus({2, 7}), (VertexSet{1, 3}));
  EXPECT_EQ(VertexSet::range(3), (VertexSet{0, 1, 2}));
}

// Randomized agreement with the edge-list oracles.
TEST(GraphProperties, FuzzAgainstOracles) {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.uniform_index(10);
    const Graph g = oracle::random_graph(n, rng.uniform01(), rng);
    std::vector<Vertex> pick;
    for (Vertex v = 0; v < n; ++v) {
      if (rng.bernoulli(0.5)) pick.push_back(v);
    }
    const VertexSet s(pick);

    EXPECT_EQ(is_independent(g, s), induced_subgraph(g, s).graph.num_edges() == 0);
    EXPECT_EQ(g.complement(), oracle::complement_slow(g));
    EXPECT_EQ(is_clique(g, s), is_independent(oracle::complement_slow(g), s));

    const Vertex v = static_cast<Vertex>(rng.uniform_index(n));
    const VertexSet nb = neighbors(g, v);
    const VertexSet non = non_neighborhood(g, {v});
    EXPECT_TRUE(nb.minus(non) == nb);
    EXPECT_EQ(nb.united(non), VertexSet::range(n).minus({v}));
    for (Vertex u : nb) EXPECT_TRUE(oracle::has_edge_slow(g, u, v));

    std::vector<int> colors(n);
    for (auto& c : colors) c = static_cast<int>(rng.uniform_index(3));
    const Coloring coloring(colors);
    bool all_independent = true;
    for (const auto& cls : coloring.classes()) all_independent &= is_independent(g, cls);
    EXPECT_EQ(is_proper_coloring(g, coloring), all_independent);

    EXPECT_EQ(is_bipartite(g), oracle::k_colorable(g, 2));
  }
}
