#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcolor/anneal.hpp"
#include "gcolor/classical.hpp"
#include "gcolor/graph.hpp"
#include "gcolor/rng.hpp"

namespace gcolor {

enum class SamplerKind { Classical, QuboAnnealing, Custom };

/// One call's worth of candidate sets, in the ids of the graph that was sampled.
struct SamplingRound {
  std::vector<VertexSet> candidates;
  std::size_t reads = 0;            ///< annealer reads consumed (0 for classical)
  std::size_t rejected_reads = 0;   ///< reads that did not decode to an independent set
  Micros backend_compute{0.0};      ///< measured time spent inside an annealing backend
};

/// Independent-set source for greedy_color. Implementations only ever see the
/// residual induced subgraph; candidates need not be valid, the engine checks.
class IndependentSetSampler {
 public:
  virtual ~IndependentSetSampler() = default;

  virtual SamplerKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual SamplingRound draw(const Graph& g, std::size_t s, Rng& rng) const = 0;
  /// Hardware timing model, for samplers that emulate the annealer.
  virtual const TimingConstants* timing() const { return nullptr; }
};

using SamplerHandle = std::shared_ptr<const IndependentSetSampler>;

SamplerHandle make_classical_sampler(SamplerParams params = {});
/// MIS QUBO with penalty alpha, sampled by backend, reads decoded per mode.
SamplerHandle make_qubo_sampler(std::shared_ptr<const SamplerBackend> backend,
                                double alpha = 2.0, DecodeMode mode = DecodeMode::Reject);

struct IterationLog {
  std::size_t chosen_size = 0;
  std::size_t candidates = 0;        ///< valid candidates in the accepted round
  std::size_t max_valid_size = 0;
  std::size_t rounds_retried = 0;    ///< rounds in this iteration with no valid set
  bool fallback = false;             ///< colored a single vertex after exhausting retries
};

struct RunResult {
  Coloring coloring;
  int k_used = 0;
  std::size_t r_a = 0;
  /// Per-run time: classical_elapsed plus qpu_modeled when present.
  Micros wallclock{0.0};
  /// Stopwatch time of the run, minus measured backend compute for hybrid runs.
  Micros classical_elapsed{0.0};
  /// Modeled annealer time over every read of the run (hybrid runs only).
  std::optional<Micros> qpu_modeled;
  Micros backend_compute{0.0};
  std::size_t total_reads = 0;
  std::vector<IterationLog> per_iteration;
};

/// Greedy coloring by repeated independent-set removal.
///
/// Each iteration draws s candidates from the sampler on the residual graph
/// and keeps the non-empty independent ones. A round with none counts toward
/// r_a and is redrawn, up to retry_cap redraws; after that a single residual
/// vertex is colored on its own. Among the largest valid candidates one is
/// picked uniformly at random (duplicates kept), given the next color and
/// removed. Always returns a proper, total coloring in the original ids.
RunResult greedy_color(const Graph& g, const IndependentSetSampler& sampler, std::size_t s,
                       std::size_t retry_cap, Rng& rng);

/// Monotonic-clock elapsed time around f().
template <typename F>
auto run_timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = std::forward<F>(f)();
  const Micros elapsed = std::chrono::steady_clock::now() - start;
  return std::pair{std::move(result), elapsed};
}

}  // namespace gcolor
