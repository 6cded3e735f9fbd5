#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gcolor/anneal.hpp"
#include "gcolor/classical.hpp"
#include "gcolor/greedy.hpp"
#include "gcolor/instance.hpp"
#include "gcolor/metrics.hpp"

namespace gcolor {

/// Default sample-number sweep: 1, 10, 20, ..., 100.
std::vector<std::size_t> default_s_values();

struct BenchConfig {
  std::vector<std::string> samplers{"classical", "qubo"};
  std::vector<std::size_t> s_values = default_s_values();
  std::size_t runs = 20;
  double p_target = 0.99;
  std::uint64_t master_seed = 0;
  std::size_t retry_cap = 10;
  std::size_t jobs = 1;

  SamplerParams classical;        ///< k is taken from each instance's k_induced
  std::string backend = "sa";     ///< annealing backend behind the "qubo" sampler
  SaSchedule schedule;
  TimingConstants timing;
  double alpha = 2.0;
  DecodeMode decode = DecodeMode::Reject;

  /// Throws std::invalid_argument on an empty s list, r == 0, p_target outside
  /// (0,1), an unknown sampler name, or an invalid schedule.
  void validate() const;
};

/// Builds the sampler named "classical" or "qubo" for a given colorability k.
SamplerHandle make_sampler(const BenchConfig& config, const std::string& name, int k);

/// One greedy_color execution, in the runs.csv row schema.
struct RunRecord {
  std::string instance_id;
  std::size_t n = 0;
  double c = 0.0;
  int k_induced = 0;
  std::string sampler;
  std::size_t s = 0;
  std::size_t run_index = 0;
  std::uint64_t seed = 0;
  int colors_used = 0;
  bool success = false;
  double wallclock_us = 0.0;              ///< rounded to 1e-3 us
  std::optional<double> qpu_modeled_us;   ///< hybrid runs only, rounded to 1e-3 us
  std::size_t k_iterations = 0;
  std::size_t rejected_rounds = 0;
  std::vector<int> coloring;
};

/// Per (instance, sampler, s) statistics.
struct InstanceStats {
  std::string instance_id;
  std::size_t n = 0;
  double c = 0.0;
  int k_induced = 0;
  std::string sampler;
  std::size_t s = 0;
  std::size_t runs = 0;
  std::size_t successes = 0;
  double p_success = 0.0;
  double wallclock_mean_us = 0.0;
  double wallclock_median_us = 0.0;
  double wallclock_sigma_us = 0.0;
  double wallclock_p40_us = 0.0;
  double wallclock_p60_us = 0.0;
  Repetitions repetitions;
  std::optional<double> tts_us;  ///< repetitions * wallclock_mean_us
};

/// Per (n, sampler, s) aggregate over instances, following the figure
/// conventions: median with 40th/60th percentile band for success, median with
/// +-sigma/2 band for wallclock (over all n_i * r runs), and TTS bands
/// propagated from both.
struct GroupStats {
  std::size_t n = 0;
  std::string sampler;
  std::size_t s = 0;
  std::size_t instances = 0;
  double p_success_median = 0.0;
  double p_success_p40 = 0.0;
  double p_success_p60 = 0.0;
  double wallclock_median_us = 0.0;
  double wallclock_mean_us = 0.0;
  double wallclock_sigma_us = 0.0;
  std::optional<double> tts_median_us;   ///< median of instance TTS, unbounded rule applied
  std::optional<double> tts_low_us;      ///< TTS(p60, median wallclock - sigma/2)
  std::optional<double> tts_high_us;     ///< TTS(p40, median wallclock + sigma/2)
  std::size_t tts_unbounded = 0;
};

struct SweepResult {
  double p_target = 0.99;
  std::vector<RunRecord> runs;
  std::vector<InstanceStats> cells;
  std::vector<GroupStats> groups;
};

/// Seed of one run: a stable hash of the master seed and the cell coordinates.
std::uint64_t derive_run_seed(std::uint64_t master_seed, const std::string& instance_id,
                              const std::string& sampler, std::size_t s, std::size_t run_index);

/// Runs config.runs seeded greedy_color executions for every
/// (instance, sampler, s) cell, distributing cells over config.jobs threads.
/// Row order is deterministic: instance, sampler, s, run_index.
///
/// With a journal directory, each completed cell is persisted there and
/// cells already journaled under the same configuration are loaded instead of
/// rerun. A journal written under a different configuration is rejected.
SweepResult run_sweep(const BenchConfig& config, const InstanceSet& instances,
                      const std::optional<std::filesystem::path>& journal_dir = std::nullopt);

/// Statistics for every cell present in runs, in first-appearance order.
std::vector<InstanceStats> compute_instance_stats(std::span<const RunRecord> runs,
                                                  double p_target);
std::vector<GroupStats> compute_group_stats(std::span<const InstanceStats> cells,
                                            std::span<const RunRecord> runs, double p_target);
SweepResult aggregate(std::vector<RunRecord> runs, double p_target);

/// Writes <dir>/manifest.json: the fully resolved configuration, the instance
/// source directory and the instance ids in sweep order.
void write_sweep_manifest(const std::filesystem::path& dir, const BenchConfig& config,
                          const std::filesystem::path& instance_dir,
                          const InstanceSet& instances);
/// Configuration recorded by write_sweep_manifest. Throws ParseError.
BenchConfig read_sweep_manifest(const std::filesystem::path& dir);

/// Rounds to the 1e-3 us resolution used in runs.csv.
double quantize_us(double us);

}  // namespace gcolor
