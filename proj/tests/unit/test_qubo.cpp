#include <gtest/gtest.h>

#include "gcolor/error.hpp"
#include "gcolor/qubo.hpp"
#include "oracles.hpp"

using namespace gcolor;

namespace {

Graph edgeless(std::size_t n) { return Graph(n, {}); }

Assignment bits(std::initializer_list<int> b) {
  Assignment out;
  for (int x : b) out.push_back(static_cast<std::uint8_t>(x));
  return out;
}

}  // namespace

TEST(Qubo, Energy) {
  Qubo q(2);
  q.add_linear(0, -1);
  q.add_linear(1, -1);
  q.add_quadratic(0, 1, 2);
  EXPECT_EQ(q.energy(bits({1, 1})), 0.0);
  EXPECT_EQ(q.energy(bits({1, 0})), -1.0);
  q.add_offset(3.5);
  EXPECT_EQ(q.energy(bits({0, 0})), 3.5);
  EXPECT_THROW(q.energy(bits({1})), std::invalid_argument);
}

TEST(Qubo, CanonicalKeys) {
  Qubo a(3);
  a.add_quadratic(2, 0, 1.5);
  Qubo b(3);
  b.add_quadratic(0, 2, 1.5);
  EXPECT_EQ(a.quadratic(), b.quadratic());
  EXPECT_EQ(a.quadratic_at(0, 2), 1.5);
  EXPECT_EQ(a.quadratic_at(2, 0), 1.5);
  a.add_quadratic(0, 2, -1.5);
  EXPECT_TRUE(a.quadratic().empty());
  EXPECT_THROW(a.add_quadratic(1, 1, 1.0), std::invalid_argument);
  for (int x = 0; x < 8; ++x) {
    const Assignment v = bits({x & 1, x >> 1 & 1, x >> 2 & 1});
    EXPECT_EQ(b.energy(v), Qubo(b).energy(v));
  }
}

TEST(MisQubo, Triangle) {
  const Qubo q = mis_qubo(Graph::complete(3));
  EXPECT_EQ(q.linear(), (std::vector<double>{-1, -1, -1}));
  const std::map<Qubo::Key, double> expected{{{0, 1}, 2.0}, {{0, 2}, 2.0}, {{1, 2}, 2.0}};
  EXPECT_EQ(q.quadratic(), expected);
  EXPECT_EQ(q.energy(bits({1, 1, 1})), 3.0);
}

TEST(MisQubo, EdgelessAndSingleEdge) {
  const Qubo e = mis_qubo(edgeless(4));
  EXPECT_TRUE(e.quadratic().empty());
  const BruteForceMinima m = brute_force_minima(e);
  EXPECT_EQ(m.min_energy, -4.0);
  EXPECT_EQ(m.argmins, (std::vector<Assignment>{bits({1, 1, 1, 1})}));

  const BruteForceMinima edge = brute_force_minima(mis_qubo(Graph(2, {{0, 1}})));
  EXPECT_EQ(edge.min_energy, -1.0);
  EXPECT_EQ(edge.argmins, (std::vector<Assignment>{bits({0, 1}), bits({1, 0})}));
}

TEST(MisQubo, RejectsSmallAlpha) {
  EXPECT_THROW(mis_qubo(Graph::path(3), 1.5), std::invalid_argument);
}

TEST(MisQubo, IndependentSetEnergyIgnoresAlpha) {
  const Graph g = Graph::cycle(7);
  for (const VertexSet& s : {VertexSet{}, VertexSet{0, 2, 4}, VertexSet{1, 3}}) {
    EXPECT_EQ(mis_qubo(g, 2).energy(indicator(7, s)), -static_cast<double>(s.size()));
    EXPECT_EQ(mis_qubo(g, 5).energy(indicator(7, s)), -static_cast<double>(s.size()));
  }
}

TEST(BruteForce, ZeroAndTriangle) {
  const BruteForceMinima zero = brute_force_minima(Qubo(2));
  EXPECT_EQ(zero.min_energy, 0.0);
  EXPECT_EQ(zero.argmins.size(), 4U);

  const BruteForceMinima k3 = brute_force_minima(mis_qubo(Graph::complete(3)));
  EXPECT_EQ(k3.min_energy, -1.0);
  EXPECT_EQ(k3.argmins,
            (std::vector<Assignment>{bits({0, 0, 1}), bits({0, 1, 0}), bits({1, 0, 0})}));
}

TEST(BruteForce, CapacityCap) {
  EXPECT_THROW(brute_force_minima(Qubo(kBruteForceMaxVars + 1)), CapabilityError);
}

TEST(GcQubo, SingleVertex) {
  const Qubo q1 = gc_qubo(Graph(1, {}), 1);
  EXPECT_EQ(q1.num_vars(), 1U);
  EXPECT_EQ(q1.offset(), 1.0);
  EXPECT_EQ(q1.linear(), (std::vector<double>{-1}));
  EXPECT_EQ(q1.energy(bits({1})), 0.0);
  EXPECT_EQ(gc_qubo(Graph(1, {}), 2).energy(bits({1, 1})), 1.0);
}

TEST(GcQubo, TriangleRainbow) {
  const Qubo q = gc_qubo(Graph::complete(3), 3);
  EXPECT_EQ(q.num_vars(), 9U);
  const BruteForceMinima m = brute_force_minima(q);
  EXPECT_EQ(m.min_energy, 0.0);
  EXPECT_EQ(m.argmins.size(), 6U);
  for (const auto& a : m.argmins) {
    std::vector<int> colors(3, -1);
    for (std::size_t v = 0; v < 3; ++v)
      for (std::size_t c = 0; c < 3; ++c)
        if (a[gc_variable(v, c, 3)] != 0) colors[v] = static_cast<int>(c);
    EXPECT_TRUE(is_proper_coloring(Graph::complete(3), Coloring(colors)));
  }
}

TEST(Support, RoundTrip) {
  const VertexSet s{1, 4};
  EXPECT_EQ(indicator(5, s), bits({0, 1, 0, 0, 1}));
  EXPECT_EQ(support(indicator(5, s)), s);
  EXPECT_THROW(indicator(3, s), std::out_of_range);
}

TEST(MisQubo, MatchesSubsetEnumeration) {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.uniform_index(10);
    const Graph g = oracle::random_graph(n, rng.uniform01(), rng);
    const auto expected = oracle::all_maximum_independent_sets(g);
    for (double alpha : {2.0, 3.0}) {
      const BruteForceMinima m = brute_force_minima(mis_qubo(g, alpha));
      EXPECT_EQ(m.argmins, expected);
      EXPECT_EQ(m.min_energy, -static_cast<double>(oracle::mis_size(g)));
    }
  }
}
