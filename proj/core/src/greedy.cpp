#include "gcolor/greedy.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcolor {

namespace {

class ClassicalSampler final : public IndependentSetSampler {
 public:
  explicit ClassicalSampler(SamplerParams params) : params_(params) {}

  SamplerKind kind() const override { return SamplerKind::Classical; }
  std::string name() const override { return "classical"; }

  SamplingRound draw(const Graph& g, std::size_t s, Rng& rng) const override {
    SamplingRound round;
    round.candidates = classical_sample_batch(g, s, params_, rng);
    return round;
  }

 private:
  SamplerParams params_;
};

class QuboSampler final : public IndependentSetSampler {
 public:
  QuboSampler(std::shared_ptr<const SamplerBackend> backend, double alpha, DecodeMode mode)
      : backend_(std::move(backend)), alpha_(alpha), mode_(mode) {
    if (!backend_) throw std::invalid_argument("qubo sampler needs a backend");
    if (!(alpha_ >= 2.0)) throw std::invalid_argument("qubo sampler: alpha must be >= 2");
  }

  SamplerKind kind() const override { return SamplerKind::QuboAnnealing; }
  std::string name() const override { return "qubo"; }
  const TimingConstants* timing() const override { return &backend_->timing(); }

  SamplingRound draw(const Graph& g, std::size_t s, Rng& rng) const override {
    const SampleBatch batch = backend_->sample(mis_qubo(g, alpha_), s, rng);
    DecodeResult decoded = decode_independent_sets(g, batch, mode_);
    SamplingRound round;
    round.candidates = std::move(decoded.valid);
    round.reads = batch.timing.num_reads;
    round.rejected_reads = decoded.invalid_count;
    round.backend_compute = batch.timing.compute_elapsed;
    return round;
  }

 private:
  std::shared_ptr<const SamplerBackend> backend_;
  double alpha_;
  DecodeMode mode_;
};

}  // namespace

SamplerHandle make_classical_sampler(SamplerParams params) {
  if (params.k < 2) throw std::invalid_argument("classical sampler: k must be >= 2");
  if (params.max_retries < 1) throw std::invalid_argument("classical sampler: max_retries >= 1");
  return std::make_shared<ClassicalSampler>(params);
}

SamplerHandle make_qubo_sampler(std::shared_ptr<const SamplerBackend> backend, double alpha,
                                DecodeMode mode) {
  return std::make_shared<QuboSampler>(std::move(backend), alpha, mode);
}

RunResult greedy_color(const Graph& g, const IndependentSetSampler& sampler, std::size_t s,
                       std::size_t retry_cap, Rng& rng) {
  if (s < 1) throw std::invalid_argument("greedy_color: s must be >= 1");
  if (retry_cap < 1) throw std::invalid_argument("greedy_color: retry_cap must be >= 1");

  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  std::vector<VertexSet> classes;
  VertexSet residual = VertexSet::range(g.num_vertices());

  while (!residual.empty()) {
    const Subgraph sub = induced_subgraph(g, residual);
    IterationLog log;
    std::vector<const VertexSet*> valid;
    SamplingRound round;

    for (std::size_t attempt = 0; attempt <= retry_cap; ++attempt) {
      round = sampler.draw(sub.graph, s, rng);
      result.total_reads += round.reads;
      result.backend_compute += round.backend_compute;
      valid.clear();
      for (const VertexSet& cand : round.candidates) {
        if (cand.empty()) continue;
        if (cand.members().back() >= sub.graph.num_vertices()) continue;
        if (is_independent(sub.graph, cand)) valid.push_back(&cand);
      }
      if (!valid.empty()) break;
      ++result.r_a;
      ++log.rounds_retried;
    }

    VertexSet chosen;
    if (valid.empty()) {
      log.fallback = true;
      chosen = VertexSet{sub.parent_ids.front()};
    } else {
      std::size_t largest = 0;
      for (const VertexSet* c : valid) largest = std::max(largest, c->size());
      std::vector<const VertexSet*> maximal;
      for (const VertexSet* c : valid)
        if (c->size() == largest) maximal.push_back(c);
      const VertexSet* pick = maximal[rng.uniform_index(maximal.size())];
      log.candidates = valid.size();
      log.max_valid_size = largest;
      chosen = sub.to_parent(*pick);
    }
    log.chosen_size = chosen.size();
    result.per_iteration.push_back(log);
    residual = residual.minus(chosen);
    classes.push_back(std::move(chosen));
  }

  result.coloring = Coloring::from_classes(g.num_vertices(), classes);
  result.k_used = static_cast<int>(classes.size());

  const Micros stopwatch = std::chrono::steady_clock::now() - start;
  if (const TimingConstants* timing = sampler.timing()) {
    result.qpu_modeled = modeled_qpu_time(result.total_reads, *timing);
    result.classical_elapsed = std::max(Micros{0.0}, stopwatch - result.backend_compute);
    result.wallclock = result.classical_elapsed + *result.qpu_modeled;
  } else {
    result.classical_elapsed = stopwatch;
    result.wallclock = stopwatch;
  }
  return result;
}

}  // namespace gcolor
