#pragma once

#include <cstddef>
#include <vector>

#include "gcolor/graph.hpp"
#include "gcolor/rng.hpp"

namespace gcolor {

/// How the recursive clique/independent-set split chooses its pivot vertex.
enum class PivotRule {
  Random,    ///< uniform over the current subgraph
  LowestId,  ///< smallest vertex id; deterministic, for tests
};

struct RamseyResult {
  VertexSet clique;
  VertexSet independent_set;
};

struct CliqueRemovalResult {
  VertexSet independent_set;
  std::vector<VertexSet> cliques;
};

struct SamplerParams {
  int k = 3;             ///< colorability parameter, >= 2
  int max_retries = 64;  ///< seed-set draws per level before falling back
  PivotRule pivot = PivotRule::Random;
};

/// Pivot split: recurse into the pivot's neighborhood and non-neighborhood and
/// keep the larger clique / independent set. Ties keep the pivot-bearing clique
/// and the pivot-free independent set.
RamseyResult ramsey(const Graph& g, Rng& rng, PivotRule pivot = PivotRule::Random);

/// Repeated ramsey with removal of each returned clique until the graph is
/// empty. The cliques partition the vertex set; the independent set is the
/// largest seen (earliest on ties).
CliqueRemovalResult clique_removal(const Graph& g, Rng& rng,
                                   PivotRule pivot = PivotRule::Random);

/// Thresholds used by sample_is on an n-vertex graph.
struct SampleIsThresholds {
  std::size_t seed_size = 0;      ///< ceil(log_k n), clamped to [1, n]
  double recurse_threshold = 0;   ///< n/k * ln n / (2 ln ln n)
  double accept_threshold = 0;    ///< ln^3 n / (6 ln ln n)
  bool guarded = false;           ///< n < 3: thresholds undefined, skip to clique removal
};

SampleIsThresholds sample_is_thresholds(std::size_t n, int k);

/// Random seed set, recursion into its non-neighborhood when that is large,
/// clique removal otherwise. Gives up after params.max_retries seed draws per
/// recursion level and returns the largest of the candidates built so far and
/// clique_removal on the level's graph. The result is always independent.
VertexSet sample_is(const Graph& g, const SamplerParams& params, Rng& rng);

/// s independent calls to sample_is sharing rng.
std::vector<VertexSet> classical_sample_batch(const Graph& g, std::size_t s,
                                              const SamplerParams& params, Rng& rng);

}  // namespace gcolor
