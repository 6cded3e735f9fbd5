#include "gcolor/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gcolor {

void TimingConstants::validate() const {
  if (anneal.count() < 0 || readout.count() < 0 || delay.count() < 0 || program.count() < 0) {
    throw std::invalid_argument("timing constants must be non-negative");
  }
}

void SaSchedule::validate() const {
  if (sweeps < 1) throw std::invalid_argument("sa schedule: sweeps must be >= 1");
  if (restarts < 1) throw std::invalid_argument("sa schedule: restarts must be >= 1");
  if (!(beta_initial > 0.0) || !(beta_final >= beta_initial)) {
    throw std::invalid_argument("sa schedule: need beta_final >= beta_initial > 0");
  }
}

SampleBatch SamplerBackend::sample(const Qubo& q, std::size_t num_reads, Rng& rng) const {
  if (num_reads == 0) throw std::invalid_argument("sample: num_reads must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  SampleBatch batch;
  batch.reads = draw(q, num_reads, rng);
  batch.energies.reserve(batch.reads.size());
  for (const auto& read : batch.reads) batch.energies.push_back(q.energy(read));
  batch.timing.compute_elapsed = std::chrono::steady_clock::now() - start;
  batch.timing.num_reads = batch.reads.size();
  batch.timing.programming = timing_.program;
  batch.timing.per_read = timing_.sample();
  batch.timing.sampling_total = static_cast<double>(batch.reads.size()) * timing_.sample();
  return batch;
}

namespace {

// Sparse row form of a QUBO, built once per batch.
struct Couplings {
  std::vector<double> linear;
  std::vector<std::size_t> row_start;
  std::vector<std::uint32_t> col;
  std::vector<double> weight;
};

Couplings compile(const Qubo& q) {
  const std::size_t n = q.num_vars();
  Couplings c;
  c.linear = q.linear();
  std::vector<std::size_t> count(n, 0);
  for (const auto& [key, w] : q.quadratic()) {
    ++count[key.first];
    ++count[key.second];
  }
  c.row_start.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) c.row_start[i + 1] = c.row_start[i] + count[i];
  c.col.resize(c.row_start[n]);
  c.weight.resize(c.row_start[n]);
  std::vector<std::size_t> fill(c.row_start.begin(), c.row_start.end() - 1);
  for (const auto& [key, w] : q.quadratic()) {
    c.col[fill[key.first]] = key.second;
    c.weight[fill[key.first]++] = w;
    c.col[fill[key.second]] = key.first;
    c.weight[fill[key.second]++] = w;
  }
  return c;
}

Assignment anneal(const Couplings& c, const SaSchedule& schedule, Rng& rng) {
  const std::size_t n = c.linear.size();
  Assignment best;
  double best_energy = 0.0;

  for (std::size_t restart = 0; restart < schedule.restarts; ++restart) {
    Assignment x(n);
    for (auto& b : x) b = static_cast<std::uint8_t>(rng() >> 63);

    // field[i] = linear[i] + sum_j w_ij x_j; flipping i changes energy by
    // (1 - 2 x_i) * field[i].
    std::vector<double> field(c.linear);
    double energy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i]) continue;
      energy += c.linear[i];
      for (std::size_t p = c.row_start[i]; p < c.row_start[i + 1]; ++p) {
        field[c.col[p]] += c.weight[p];
        if (c.col[p] > i && x[c.col[p]]) energy += c.weight[p];
      }
    }
    Assignment run_best = x;
    double run_best_energy = energy;

    const double ratio = schedule.beta_final / schedule.beta_initial;
    for (std::size_t sweep = 0; sweep < schedule.sweeps; ++sweep) {
      const double beta =
          schedule.sweeps == 1
              ? schedule.beta_final
              : schedule.beta_initial *
                    std::pow(ratio, static_cast<double>(sweep) /
                                        static_cast<double>(schedule.sweeps - 1));
      for (std::size_t i = 0; i < n; ++i) {
        const double delta = x[i] ? -field[i] : field[i];
        bool accept = delta <= 0.0;
        if (!accept) {
          const double arg = beta * delta;
          accept = arg < 40.0 && rng.uniform01() < std::exp(-arg);
        }
        if (!accept) continue;
        const double step = x[i] ? -1.0 : 1.0;
        x[i] ^= 1U;
        energy += delta;
        for (std::size_t p = c.row_start[i]; p < c.row_start[i + 1]; ++p)
          field[c.col[p]] += step * c.weight[p];
        if (energy < run_best_energy) {
          run_best_energy = energy;
          run_best = x;
        }
      }
    }
    if (restart == 0 || run_best_energy < best_energy) {
      best_energy = run_best_energy;
      best = std::move(run_best);
    }
  }
  return best;
}

}  // namespace

SimulatedAnnealingBackend::SimulatedAnnealingBackend(SaSchedule schedule, TimingConstants timing)
    : SamplerBackend(timing), schedule_(schedule) {
  schedule_.validate();
}

std::vector<Assignment> SimulatedAnnealingBackend::draw(const Qubo& q, std::size_t num_reads,
                                                        Rng& rng) const {
  const Couplings c = compile(q);
  // Seeds are fixed before any anneal runs so reads could be computed in any order.
  std::vector<std::uint64_t> seeds(num_reads);
  for (auto& s : seeds) s = rng();
  std::vector<Assignment> reads;
  reads.reserve(num_reads);
  for (std::uint64_t s : seeds) {
    Rng read_rng(splitmix64(s));
    reads.push_back(anneal(c, schedule_, read_rng));
  }
  return reads;
}

std::vector<Assignment> RandomBitstringBackend::draw(const Qubo& q, std::size_t num_reads,
                                                     Rng& rng) const {
  std::vector<Assignment> reads(num_reads, Assignment(q.num_vars()));
  for (auto& read : reads)
    for (auto& b : read) b = static_cast<std::uint8_t>(rng() >> 63);
  return reads;
}

std::unique_ptr<SamplerBackend> make_backend(const std::string& name, const SaSchedule& schedule,
                                             const TimingConstants& timing) {
  if (name == "sa") return std::make_unique<SimulatedAnnealingBackend>(schedule, timing);
  if (name == "random") return std::make_unique<RandomBitstringBackend>(timing);
  throw std::invalid_argument("unknown sampler backend '" + name + "' (expected sa or random)");
}

Assignment sa_anneal_one(const Qubo& q, const SaSchedule& schedule, Rng& rng) {
  schedule.validate();
  return anneal(compile(q), schedule, rng);
}

DecodeResult decode_independent_sets(const Graph& g, const SampleBatch& batch, DecodeMode mode) {
  DecodeResult out;
  for (const auto& read : batch.reads) {
    if (read.size() != g.num_vertices()) {
      throw std::invalid_argument("read length " + std::to_string(read.size()) +
                                  " does not match graph with " +
                                  std::to_string(g.num_vertices()) + " vertices");
    }
    VertexSet s = support(read);
    if (is_independent(g, s)) {
      out.valid.push_back(std::move(s));
      continue;
    }
    if (mode == DecodeMode::Reject) {
      ++out.invalid_count;
      continue;
    }
    Assignment kept = read;
    for (const Edge& e : g.edges()) {
      if (!kept[e.u] || !kept[e.v]) continue;
      const std::size_t du = g.degree(e.u);
      const std::size_t dv = g.degree(e.v);
      kept[(du > dv || (du == dv && e.u > e.v)) ? e.u : e.v] = 0;
    }
    out.valid.push_back(support(kept));
    ++out.repaired_count;
  }
  return out;
}

Micros modeled_qpu_time(std::size_t total_reads, const TimingConstants& constants) {
  return static_cast<double>(total_reads) * constants.sample() + constants.program;
}

}  // namespace gcolor
