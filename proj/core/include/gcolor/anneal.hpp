#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "gcolor/graph.hpp"
#include "gcolor/qubo.hpp"
#include "gcolor/rng.hpp"

namespace gcolor {

using Micros = std::chrono::duration<double, std::micro>;

/// Per-read hardware timing model. Defaults:
/// 20 us anneal, 41 us readout, 309 us thermalization delay.
struct TimingConstants {
  Micros anneal{20.0};
  Micros readout{41.0};
  Micros delay{309.0};
  Micros program{0.0};

  Micros sample() const { return anneal + readout + delay; }
  void validate() const;
};

/// Hardware-style accounting for one batch. The modeled fields come from
/// TimingConstants only; compute_elapsed is the measured cost of producing the
/// reads on this machine and is never mixed into the modeled fields.
struct TimingBreakdown {
  std::size_t num_reads = 0;
  Micros programming{0.0};
  Micros per_read{0.0};
  Micros sampling_total{0.0};  ///< num_reads * per_read
  Micros compute_elapsed{0.0};
};

struct SampleBatch {
  std::vector<Assignment> reads;
  std::vector<double> energies;  ///< energies[i] == q.energy(reads[i])
  TimingBreakdown timing;
};

/// Metropolis single-flip schedule over a geometric inverse-temperature ladder.
struct SaSchedule {
  std::size_t sweeps = 1000;
  double beta_initial = 0.1;
  double beta_final = 10.0;
  std::size_t restarts = 1;

  void validate() const;
};

/// Sampler contract: num_reads assignments for a QUBO, with energies and a
/// modeled timing breakdown. The batch is a deterministic function of
/// (q, num_reads, backend configuration, rng state).
class SamplerBackend {
 public:
  explicit SamplerBackend(TimingConstants timing) : timing_(timing) { timing_.validate(); }
  virtual ~SamplerBackend() = default;

  virtual std::string name() const = 0;
  const TimingConstants& timing() const noexcept { return timing_; }

  /// Throws std::invalid_argument for num_reads == 0.
  SampleBatch sample(const Qubo& q, std::size_t num_reads, Rng& rng) const;

 protected:
  virtual std::vector<Assignment> draw(const Qubo& q, std::size_t num_reads, Rng& rng) const = 0;

 private:
  TimingConstants timing_;
};

/// Default backend: simulated annealing, one independently seeded anneal per read.
class SimulatedAnnealingBackend final : public SamplerBackend {
 public:
  explicit SimulatedAnnealingBackend(SaSchedule schedule = {}, TimingConstants timing = {});

  std::string name() const override { return "sa"; }
  const SaSchedule& schedule() const noexcept { return schedule_; }

 protected:
  std::vector<Assignment> draw(const Qubo& q, std::size_t num_reads, Rng& rng) const override;

 private:
  SaSchedule schedule_;
};

/// Uniform random bitstrings; an adversarial stand-in that ignores the objective.
class RandomBitstringBackend final : public SamplerBackend {
 public:
  explicit RandomBitstringBackend(TimingConstants timing = {}) : SamplerBackend(timing) {}

  std::string name() const override { return "random"; }

 protected:
  std::vector<Assignment> draw(const Qubo& q, std::size_t num_reads, Rng& rng) const override;
};

/// "sa" or "random"; throws std::invalid_argument for anything else.
std::unique_ptr<SamplerBackend> make_backend(const std::string& name, const SaSchedule& schedule,
                                             const TimingConstants& timing);

/// One anneal from a uniformly random start; returns the lowest-energy state seen.
Assignment sa_anneal_one(const Qubo& q, const SaSchedule& schedule, Rng& rng);

enum class DecodeMode {
  Reject,  ///< reads with an internal edge are discarded and counted
  Repair,  ///< drop the higher-degree endpoint (higher id on ties) of each violated edge
};

struct DecodeResult {
  std::vector<VertexSet> valid;
  std::size_t invalid_count = 0;
  std::size_t repaired_count = 0;
};

/// Reads of a mis_qubo(g, .) batch as vertex sets. Throws std::invalid_argument
/// when a read's length differs from g's vertex count.
DecodeResult decode_independent_sets(const Graph& g, const SampleBatch& batch,
                                     DecodeMode mode = DecodeMode::Reject);

/// total_reads * (anneal + readout + delay) + program.
Micros modeled_qpu_time(std::size_t total_reads, const TimingConstants& constants);

}  // namespace gcolor
