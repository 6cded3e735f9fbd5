#include <gtest/gtest.h>

#include "gcolor/chromatic.hpp"
#include "gcolor/error.hpp"
#include "gcolor/instance.hpp"
#include "oracles.hpp"

using namespace gcolor;

TEST(Chromatic, SmallGraphs) {
  EXPECT_EQ(exact_chromatic_number(Graph::complete(4)), 4);
  EXPECT_EQ(exact_chromatic_number(Graph::cycle(5)), 3);
  EXPECT_EQ(exact_chromatic_number(Graph::cycle(6)), 2);
  EXPECT_EQ(exact_chromatic_number(Graph(5, {})), 1);
  EXPECT_EQ(exact_chromatic_number(Graph(0, {})), 0);
}

TEST(Chromatic, Cap) {
  EXPECT_THROW(exact_chromatic_number(Graph::path(kChromaticMaxVertices + 1)), CapabilityError);
  EXPECT_EQ(exact_chromatic_number(Graph::path(kChromaticMaxVertices)), 2);
}

TEST(Chromatic, AgreesWithBacktracking) {
  Rng rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng.uniform_index(11);
    const Graph g = oracle::random_graph(n, rng.uniform01(), rng);
    EXPECT_EQ(exact_chromatic_number(g), oracle::chromatic_number_slow(g));
  }
}

TEST(Chromatic, PlantedInstancesAtTwelve) {
  for (std::size_t i = 0; i < 20; ++i) {
    const PlantedInstance inst = generate_planted(12, 3, 4.5, derive_instance_seed(0, 12, i));
    EXPECT_LE(exact_chromatic_number(inst.graph), 3);
  }
}

TEST(Chromatic, PlantedInstancesAtThirty) {
  for (std::size_t i = 0; i < 5; ++i) {
    const PlantedInstance inst = generate_planted(30, 3, 4.5, derive_instance_seed(1, 30, i));
    EXPECT_LE(exact_chromatic_number(inst.graph), 3);
  }
}
