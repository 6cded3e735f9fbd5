#include "gcolor/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <nlohmann/json.hpp>

#include "gcolor/error.hpp"
#include "gcolor/metrics.hpp"
#include "gcolor/report.hpp"

namespace gcolor {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<std::size_t> default_s_values() {
  std::vector<std::size_t> s{1};
  for (std::size_t v = 10; v <= 100; v += 10) s.push_back(v);
  return s;
}

void BenchConfig::validate() const {
  if (s_values.empty()) throw std::invalid_argument("bench config: s list is empty");
  if (std::any_of(s_values.begin(), s_values.end(), [](std::size_t s) { return s == 0; })) {
    throw std::invalid_argument("bench config: every s must be >= 1");
  }
  if (samplers.empty()) throw std::invalid_argument("bench config: no samplers");
  for (const auto& name : samplers) {
    if (name != "classical" && name != "qubo") {
      throw std::invalid_argument("bench config: unknown sampler '" + name +
                                  "' (expected classical or qubo)");
    }
  }
  if (runs < 1) throw std::invalid_argument("bench config: runs must be >= 1");
  if (!(p_target > 0.0 && p_target < 1.0)) {
    throw std::invalid_argument("bench config: p_target must lie in (0,1)");
  }
  if (retry_cap < 1) throw std::invalid_argument("bench config: retry_cap must be >= 1");
  if (!(alpha >= 2.0)) throw std::invalid_argument("bench config: alpha must be >= 2");
  if (backend != "sa" && backend != "random") {
    throw std::invalid_argument("bench config: unknown backend '" + backend + "'");
  }
  schedule.validate();
  timing.validate();
}

SamplerHandle make_sampler(const BenchConfig& config, const std::string& name, int k) {
  if (name == "classical") {
    SamplerParams params = config.classical;
    params.k = std::max(2, k);
    return make_classical_sampler(params);
  }
  if (name == "qubo") {
    std::shared_ptr<const SamplerBackend> backend =
        make_backend(config.backend, config.schedule, config.timing);
    return make_qubo_sampler(std::move(backend), config.alpha, config.decode);
  }
  throw std::invalid_argument("unknown sampler '" + name + "' (expected classical or qubo)");
}

std::uint64_t derive_run_seed(std::uint64_t master_seed, const std::string& instance_id,
                              const std::string& sampler, std::size_t s, std::size_t run_index) {
  std::uint64_t h = mix_seeds(master_seed, hash_string(instance_id));
  h = mix_seeds(h, hash_string(sampler));
  h = mix_seeds(h, s);
  return mix_seeds(h, run_index);
}

double quantize_us(double us) { return std::round(us * 1000.0) / 1000.0; }

namespace {

struct Cell {
  const PlantedInstance* instance;
  std::string sampler;
  std::size_t s;
};

json config_fingerprint(const BenchConfig& c) {
  json j;
  j["samplers"] = c.samplers;
  j["s_values"] = c.s_values;
  j["runs"] = c.runs;
  j["master_seed"] = c.master_seed;
  j["retry_cap"] = c.retry_cap;
  j["classical_max_retries"] = c.classical.max_retries;
  j["classical_pivot"] = c.classical.pivot == PivotRule::Random ? "random" : "lowest-id";
  j["backend"] = c.backend;
  j["sa_sweeps"] = c.schedule.sweeps;
  j["sa_beta_initial"] = c.schedule.beta_initial;
  j["sa_beta_final"] = c.schedule.beta_final;
  j["sa_restarts"] = c.schedule.restarts;
  j["t_anneal_us"] = c.timing.anneal.count();
  j["t_readout_us"] = c.timing.readout.count();
  j["t_delay_us"] = c.timing.delay.count();
  j["t_program_us"] = c.timing.program.count();
  j["alpha"] = c.alpha;
  j["decode"] = c.decode == DecodeMode::Reject ? "reject" : "repair";
  return j;
}

std::vector<RunRecord> run_cell(const BenchConfig& config, const Cell& cell) {
  const PlantedInstance& inst = *cell.instance;
  const SamplerHandle sampler = make_sampler(config, cell.sampler, inst.k_induced);
  std::vector<RunRecord> rows;
  rows.reserve(config.runs);
  for (std::size_t run = 0; run < config.runs; ++run) {
    RunRecord rec;
    rec.instance_id = inst.instance_id;
    rec.n = inst.n;
    rec.c = inst.c;
    rec.k_induced = inst.k_induced;
    rec.sampler = cell.sampler;
    rec.s = cell.s;
    rec.run_index = run;
    rec.seed = derive_run_seed(config.master_seed, inst.instance_id, cell.sampler, cell.s, run);
    Rng rng(rec.seed);
    const RunResult result = greedy_color(inst.graph, *sampler, cell.s, config.retry_cap, rng);
    if (!is_proper_coloring(inst.graph, result.coloring)) {
      throw std::logic_error("greedy_color produced an improper coloring on " + inst.instance_id);
    }
    rec.colors_used = result.coloring.num_colors();
    rec.success = rec.colors_used <= inst.k_induced;
    rec.wallclock_us = quantize_us(result.wallclock.count());
    if (result.qpu_modeled) rec.qpu_modeled_us = quantize_us(result.qpu_modeled->count());
    rec.k_iterations = static_cast<std::size_t>(result.k_used);
    rec.rejected_rounds = result.r_a;
    rec.coloring = result.coloring.assignment();
    rows.push_back(std::move(rec));
  }
  return rows;
}

std::string cell_file_name(const Cell& cell) {
  return cell.instance->instance_id + "__" + cell.sampler + "__s" + std::to_string(cell.s) +
         ".csv";
}

std::vector<int> parse_coloring_field(const std::string& field, std::size_t line_no) {
  std::vector<int> out;
  std::istringstream in(field);
  int c;
  while (in >> c) out.push_back(c);
  if (!in.eof()) throw ParseError(line_no, "malformed coloring field");
  return out;
}

std::optional<std::vector<RunRecord>> load_cell(const fs::path& path, std::size_t runs) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::vector<RunRecord> rows;
  std::string line;
  std::size_t line_no = 0;
  try {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      const auto bar = line.rfind(',');
      RunRecord rec = parse_run_row(line.substr(0, bar), line_no);
      rec.coloring = parse_coloring_field(line.substr(bar + 1), line_no);
      rows.push_back(std::move(rec));
    }
  } catch (const ParseError&) {
    return std::nullopt;
  }
  if (rows.size() != runs) return std::nullopt;
  return rows;
}

void store_cell(const fs::path& path, const std::vector<RunRecord>& rows) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write journal file " + tmp.string());
    for (const auto& rec : rows) {
      std::string coloring;
      for (std::size_t i = 0; i < rec.coloring.size(); ++i) {
        if (i) coloring += ' ';
        coloring += std::to_string(rec.coloring[i]);
      }
      out << format_run_row(rec) << ',' << coloring << '\n';
    }
    if (!out) throw std::runtime_error("write failed for journal file " + tmp.string());
  }
  fs::rename(tmp, path);
}

void prepare_journal(const fs::path& dir, const BenchConfig& config) {
  fs::create_directories(dir / "cells");
  const fs::path stamp = dir / "journal.json";
  const json fingerprint = config_fingerprint(config);
  if (fs::exists(stamp)) {
    std::ifstream in(stamp);
    json existing;
    try {
      existing = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ParseError(0, e.what(), stamp.string());
    }
    if (existing != fingerprint) {
      throw std::invalid_argument("journal in " + dir.string() +
                                  " was written by a different sweep configuration");
    }
    return;
  }
  std::ofstream out(stamp, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + stamp.string());
  out << fingerprint.dump(2) << '\n';
}

}  // namespace

SweepResult run_sweep(const BenchConfig& config, const InstanceSet& instances,
                      const std::optional<fs::path>& journal_dir) {
  config.validate();
  if (instances.instances.empty()) throw std::invalid_argument("run_sweep: no instances");
  if (journal_dir) prepare_journal(*journal_dir, config);

  std::vector<Cell> cells;
  for (const auto& inst : instances.instances)
    for (const auto& sampler : config.samplers)
      for (std::size_t s : config.s_values) cells.push_back({&inst, sampler, s});

  std::vector<std::vector<RunRecord>> results(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        std::optional<fs::path> cell_path;
        if (journal_dir) {
          cell_path = *journal_dir / "cells" / cell_file_name(cells[i]);
          if (auto loaded = load_cell(*cell_path, config.runs)) {
            results[i] = std::move(*loaded);
            continue;
          }
        }
        results[i] = run_cell(config, cells[i]);
        if (cell_path) store_cell(*cell_path, results[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cells.size();
        return;
      }
    }
  };

  const std::size_t jobs = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(1, cells.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<RunRecord> runs;
  runs.reserve(cells.size() * config.runs);
  for (auto& rows : results)
    for (auto& r : rows) runs.push_back(std::move(r));
  return aggregate(std::move(runs), config.p_target);
}

std::vector<InstanceStats> compute_instance_stats(std::span<const RunRecord> runs,
                                                  double p_target) {
  using Key = std::tuple<std::string, std::string, std::size_t>;
  std::map<Key, std::size_t> index;
  std::vector<std::vector<const RunRecord*>> members;
  for (const auto& r : runs) {
    auto [it, inserted] = index.try_emplace(Key{r.instance_id, r.sampler, r.s}, members.size());
    if (inserted) members.emplace_back();
    members[it->second].push_back(&r);
  }

  std::vector<InstanceStats> out;
  out.reserve(members.size());
  for (const auto& group : members) {
    const RunRecord& first = *group.front();
    InstanceStats st;
    st.instance_id = first.instance_id;
    st.n = first.n;
    st.c = first.c;
    st.k_induced = first.k_induced;
    st.sampler = first.sampler;
    st.s = first.s;
    st.runs = group.size();

    std::vector<int> colors;
    std::vector<double> wall;
    std::vector<Micros> wall_t;
    for (const RunRecord* r : group) {
      colors.push_back(r->colors_used);
      wall.push_back(r->wallclock_us);
      wall_t.emplace_back(r->wallclock_us);
      if (r->success) ++st.successes;
    }
    st.p_success = static_cast<double>(st.successes) / static_cast<double>(st.runs);
    st.wallclock_mean_us = mean_wallclock(wall_t).count();
    st.wallclock_median_us = median(wall);
    st.wallclock_sigma_us = stddev(wall);
    st.wallclock_p40_us = percentile(wall, 40.0);
    st.wallclock_p60_us = percentile(wall, 60.0);
    st.repetitions = repetitions_R(st.p_success, p_target);
    if (auto tts = time_to_solution(st.p_success, Micros{st.wallclock_mean_us}, p_target)) {
      st.tts_us = tts->count();
    }
    out.push_back(std::move(st));
  }
  return out;
}

std::vector<GroupStats> compute_group_stats(std::span<const InstanceStats> cells,
                                            std::span<const RunRecord> runs, double p_target) {
  using Key = std::tuple<std::size_t, std::string, std::size_t>;
  std::map<Key, std::vector<const InstanceStats*>> by_group;
  std::map<Key, std::vector<double>> wall_by_group;
  for (const auto& c : cells) by_group[Key{c.n, c.sampler, c.s}].push_back(&c);
  for (const auto& r : runs) wall_by_group[Key{r.n, r.sampler, r.s}].push_back(r.wallclock_us);

  std::vector<GroupStats> out;
  for (const auto& [key, members] : by_group) {
    GroupStats g;
    std::tie(g.n, g.sampler, g.s) = key;
    g.instances = members.size();
    std::vector<double> p;
    std::vector<std::optional<double>> tts;
    for (const InstanceStats* m : members) {
      p.push_back(m->p_success);
      tts.push_back(m->tts_us);
      if (!m->tts_us) ++g.tts_unbounded;
    }
    g.p_success_median = median(p);
    g.p_success_p40 = percentile(p, 40.0);
    g.p_success_p60 = percentile(p, 60.0);
    const std::vector<double>& wall = wall_by_group.at(key);
    g.wallclock_median_us = median(wall);
    g.wallclock_sigma_us = stddev(wall);
    double sum = 0.0;
    for (double w : wall) sum += w;
    g.wallclock_mean_us = sum / static_cast<double>(wall.size());
    g.tts_median_us = median_with_unbounded(tts);

    const double half_sigma = g.wallclock_sigma_us / 2.0;
    const double low_wall = std::max(0.0, g.wallclock_median_us - half_sigma);
    if (auto t = time_to_solution(g.p_success_p60, Micros{low_wall}, p_target))
      g.tts_low_us = t->count();
    if (auto t = time_to_solution(g.p_success_p40, Micros{g.wallclock_median_us + half_sigma},
                                  p_target))
      g.tts_high_us = t->count();
    out.push_back(std::move(g));
  }
  return out;
}

void write_sweep_manifest(const fs::path& dir, const BenchConfig& config,
                          const fs::path& instance_dir, const InstanceSet& instances) {
  fs::create_directories(dir);
  json m;
  m["kind"] = "sweep";
  m["config"] = config_fingerprint(config);
  m["config"]["p_target"] = config.p_target;
  m["config"]["jobs"] = config.jobs;
  m["instance_dir"] = instance_dir.string();
  json ids = json::array();
  for (const auto& inst : instances.instances) ids.push_back(inst.instance_id);
  m["instances"] = ids;
  m["files"] = {"runs.csv", "colorings.csv", "stats.csv", "groups.csv"};
  std::ofstream out(dir / "manifest.json", std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + (dir / "manifest.json").string());
  out << m.dump(2) << '\n';
}

BenchConfig read_sweep_manifest(const fs::path& dir) {
  const fs::path path = dir / "manifest.json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  BenchConfig c;
  try {
    const json m = json::parse(in);
    const json& j = m.at("config");
    c.samplers = j.at("samplers").get<std::vector<std::string>>();
    c.s_values = j.at("s_values").get<std::vector<std::size_t>>();
    c.runs = j.at("runs").get<std::size_t>();
    c.p_target = j.at("p_target").get<double>();
    c.master_seed = j.at("master_seed").get<std::uint64_t>();
    c.retry_cap = j.at("retry_cap").get<std::size_t>();
    c.jobs = j.value("jobs", std::size_t{1});
    c.classical.max_retries = j.at("classical_max_retries").get<int>();
    c.classical.pivot =
        j.at("classical_pivot").get<std::string>() == "random" ? PivotRule::Random : PivotRule::LowestId;
    c.backend = j.at("backend").get<std::string>();
    c.schedule.sweeps = j.at("sa_sweeps").get<std::size_t>();
    c.schedule.beta_initial = j.at("sa_beta_initial").get<double>();
    c.schedule.beta_final = j.at("sa_beta_final").get<double>();
    c.schedule.restarts = j.at("sa_restarts").get<std::size_t>();
    c.timing.anneal = Micros{j.at("t_anneal_us").get<double>()};
    c.timing.readout = Micros{j.at("t_readout_us").get<double>()};
    c.timing.delay = Micros{j.at("t_delay_us").get<double>()};
    c.timing.program = Micros{j.at("t_program_us").get<double>()};
    c.alpha = j.at("alpha").get<double>();
    c.decode = j.at("decode").get<std::string>() == "repair" ? DecodeMode::Repair : DecodeMode::Reject;
  } catch (const json::exception& e) {
    throw ParseError(0, e.what(), path.string());
  }
  return c;
}

SweepResult aggregate(std::vector<RunRecord> runs, double p_target) {
  SweepResult out;
  out.p_target = p_target;
  out.runs = std::move(runs);
  out.cells = compute_instance_stats(out.runs, p_target);
  out.groups = compute_group_stats(out.cells, out.runs, p_target);
  return out;
}

}  // namespace gcolor
