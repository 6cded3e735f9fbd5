#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "gcolor/graph.hpp"

namespace gcolor {

/// Edge probability c/n for edge-density parameter c (edges per vertex),
/// clamped to [0,1]. Throws std::invalid_argument for n == 0.
double edge_probability(std::size_t n, double c);

struct PlantOptions {
  /// Round-robin class sizes (shuffled) instead of independent uniform draws.
  bool balanced_classes = false;
  /// Regenerate until the graph is not 2-colorable.
  bool reject_bipartite = false;
  /// Bound on rerolls, both for degenerate class draws and bipartite rejection.
  int max_rerolls = 1000;
};

struct PlantedInstance {
  Graph graph;
  Coloring planted_coloring;
  std::size_t n = 0;
  double c = 0.0;
  int k_induced = 0;
  std::uint64_t seed = 0;
  std::string instance_id;
};

/// Random graph with a hidden proper k-coloring.
///
/// Each vertex draws a class uniformly from 0..k-1; every pair of vertices in
/// different classes becomes an edge independently with probability
/// c*n / (#cross-class pairs), clamped to 1, so the expected edge count is c*n.
/// No edge ever joins two vertices of the same class.
PlantedInstance generate_planted(std::size_t n, int k_induced, double c, std::uint64_t seed,
                                 const PlantOptions& options = {});

/// Per-instance seed: stable hash of (master_seed, size, index).
std::uint64_t derive_instance_seed(std::uint64_t master_seed, std::size_t size,
                                   std::size_t index);

/// "n<size>-k<k>-i<index>" with a zero-padded three-digit index.
std::string make_instance_id(std::size_t n, int k_induced, std::size_t index);

struct InstanceSetParams {
  std::vector<std::size_t> sizes{20, 40, 60};
  std::size_t per_size = 20;
  int k_induced = 3;
  double c = 4.5;
  std::uint64_t master_seed = 0;
  PlantOptions options;
};

struct InstanceSet {
  std::vector<PlantedInstance> instances;
  InstanceSetParams params;
};

InstanceSet generate_test_set(const InstanceSetParams& params);

// DIMACS .col: "p edge n m" then one "e u v" line per edge, 1-indexed, LF.
// Lines starting with 'c' are comments on input; output has none.
void write_dimacs(std::ostream& out, const Graph& g);
void write_dimacs(const std::filesystem::path& path, const Graph& g);
/// Throws ParseError naming the offending line.
Graph read_dimacs(std::istream& in);
Graph read_dimacs(const std::filesystem::path& path);

/// Sidecar "<stem>.meta" next to ".col": JSON object with instance_id, n, c,
/// k_induced, seed and the planted_coloring array.
void write_instance(const std::filesystem::path& col_path, const PlantedInstance& instance);
PlantedInstance read_instance(const std::filesystem::path& col_path);

/// Writes every instance as <dir>/<instance_id>.col plus .meta, and a
/// manifest.json recording the generation parameters and file list.
void write_instance_set(const std::filesystem::path& dir, const InstanceSet& set);
/// Reads the manifest in dir, or when absent every *.col with a .meta sidecar
/// in lexicographic order.
InstanceSet read_instance_set(const std::filesystem::path& dir);

}  // namespace gcolor
