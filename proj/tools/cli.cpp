#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "gcolor/anneal.hpp"
#include "gcolor/chromatic.hpp"
#include "gcolor/error.hpp"
#include "gcolor/greedy.hpp"
#include "gcolor/instance.hpp"
#include "gcolor/report.hpp"
#include "gcolor/sweep.hpp"

namespace gcolor::cli {

namespace fs = std::filesystem;

namespace {

struct GenArgs {
  std::vector<std::size_t> sizes{20, 40, 60};
  std::size_t count = 20;
  double c = 4.5;
  int k = 3;
  std::uint64_t seed = 0;
  std::string out;
  bool balanced = false;
  bool reject_bipartite = false;
};

// Sampler settings shared by color and sweep.
struct EngineArgs {
  std::string backend = "sa";
  std::size_t sa_sweeps = 1000;
  double beta_initial = 0.1;
  double beta_final = 10.0;
  std::size_t sa_restarts = 1;
  double t_anneal = 20.0;
  double t_readout = 41.0;
  double t_delay = 309.0;
  double t_program = 0.0;
  double alpha = 2.0;
  bool repair = false;
  int max_retries = 64;
  std::size_t retry_cap = 10;
};

struct ColorArgs {
  std::string graph;
  std::string sampler = "qubo";
  std::size_t s = 30;
  std::uint64_t seed = 0;
  int k = 0;
};

struct SweepArgs {
  std::string instances;
  std::vector<std::string> samplers{"classical", "qubo"};
  std::vector<std::size_t> s_list = default_s_values();
  std::size_t runs = 20;
  double p_target = 0.99;
  std::uint64_t seed = 0;
  std::string out;
  std::size_t jobs = 0;
};

struct ReportArgs {
  std::string sweep_dir;
  std::optional<double> p_target;
};

void add_engine_options(CLI::App* cmd, EngineArgs& e) {
  cmd->add_option("--backend", e.backend, "Annealing backend behind the qubo sampler")
      ->check(CLI::IsMember({"sa", "random"}))
      ->capture_default_str();
  cmd->add_option("--sa-sweeps", e.sa_sweeps, "Simulated annealing sweeps per read")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--beta-initial", e.beta_initial)->capture_default_str();
  cmd->add_option("--beta-final", e.beta_final)->capture_default_str();
  cmd->add_option("--sa-restarts", e.sa_restarts)->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--t-anneal", e.t_anneal, "Modeled anneal time per read [us]")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--t-readout", e.t_readout, "Modeled readout time per read [us]")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--t-delay", e.t_delay, "Modeled thermalization delay per read [us]")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--t-program", e.t_program, "Modeled programming time per run [us]")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--alpha", e.alpha, "MIS QUBO edge penalty (>= 2)")
      ->check(CLI::Range(2.0, 1e9))
      ->capture_default_str();
  cmd->add_flag("--repair", e.repair, "Repair invalid reads instead of rejecting them");
  cmd->add_option("--max-retries", e.max_retries, "Seed-set draws per level in the classical sampler")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--retry-cap", e.retry_cap, "Redraws per iteration before single-vertex fallback")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

BenchConfig engine_config(const EngineArgs& e) {
  BenchConfig c;
  c.backend = e.backend;
  c.schedule.sweeps = e.sa_sweeps;
  c.schedule.beta_initial = e.beta_initial;
  c.schedule.beta_final = e.beta_final;
  c.schedule.restarts = e.sa_restarts;
  c.timing.anneal = Micros{e.t_anneal};
  c.timing.readout = Micros{e.t_readout};
  c.timing.delay = Micros{e.t_delay};
  c.timing.program = Micros{e.t_program};
  c.alpha = e.alpha;
  c.decode = e.repair ? DecodeMode::Repair : DecodeMode::Reject;
  c.classical.max_retries = e.max_retries;
  c.retry_cap = e.retry_cap;
  return c;
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  InstanceSetParams params;
  params.sizes = a.sizes;
  params.per_size = a.count;
  params.k_induced = a.k;
  params.c = a.c;
  params.master_seed = a.seed;
  params.options.balanced_classes = a.balanced;
  params.options.reject_bipartite = a.reject_bipartite;
  const InstanceSet set = generate_test_set(params);
  write_instance_set(a.out, set);
  out << "instances: " << set.instances.size() << '\n' << "directory: " << a.out << '\n';
  return kExitOk;
}

int cmd_color(const ColorArgs& a, const EngineArgs& e, std::ostream& out) {
  const fs::path path(a.graph);
  Graph g = read_dimacs(path);
  int k = a.k;
  fs::path meta = path;
  meta.replace_extension(".meta");
  if (k == 0 && fs::exists(meta)) k = read_instance(path).k_induced;
  if (k == 0) k = 3;

  const BenchConfig config = engine_config(e);
  config.schedule.validate();
  const SamplerHandle sampler = make_sampler(config, a.sampler, k);
  Rng rng(a.seed);
  const RunResult result = greedy_color(g, *sampler, a.s, config.retry_cap, rng);

  out << "graph: " << a.graph << '\n'
      << "vertices: " << g.num_vertices() << '\n'
      << "edges: " << g.num_edges() << '\n'
      << "sampler: " << a.sampler << '\n'
      << "s: " << a.s << '\n'
      << "seed: " << a.seed << '\n'
      << "proper: " << (is_proper_coloring(g, result.coloring) ? "yes" : "no") << '\n'
      << "colors: " << result.coloring.num_colors() << '\n'
      << "rejected_rounds: " << result.r_a << '\n';
  const auto classes = result.coloring.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out << "class " << c << ":";
    // 1-based, matching the DIMACS input.
    for (Vertex v : classes[c]) out << ' ' << v + 1;
    out << '\n';
  }
  out << "wallclock_us: " << fixed3(result.wallclock.count()) << '\n';
  if (result.qpu_modeled) {
    out << "classical_us: " << fixed3(result.classical_elapsed.count()) << '\n'
        << "qpu_modeled_us: " << fixed3(result.qpu_modeled->count()) << '\n'
        << "reads: " << result.total_reads << '\n'
        << "backend_compute_us: " << fixed3(result.backend_compute.count()) << '\n';
  }
  return kExitOk;
}

int cmd_sweep(const SweepArgs& a, const EngineArgs& e, std::ostream& out) {
  BenchConfig config = engine_config(e);
  config.samplers = a.samplers;
  config.s_values = a.s_list;
  config.runs = a.runs;
  config.p_target = a.p_target;
  config.master_seed = a.seed;
  config.jobs = a.jobs != 0 ? a.jobs : std::max(1U, std::thread::hardware_concurrency());
  config.validate();

  const InstanceSet instances = read_instance_set(a.instances);
  if (instances.instances.empty()) {
    throw std::runtime_error("no instances found in " + a.instances);
  }
  const fs::path dir(a.out);
  write_sweep_manifest(dir, config, a.instances, instances);
  const SweepResult sweep = run_sweep(config, instances, dir / "journal");
  emit_report(sweep, dir, config.timing);

  out << "runs: " << sweep.runs.size() << '\n'
      << "cells: " << sweep.cells.size() << '\n'
      << "groups: " << sweep.groups.size() << '\n'
      << "directory: " << a.out << '\n';
  for (const auto& g : sweep.groups) {
    out << "n=" << g.n << " sampler=" << g.sampler << " s=" << g.s
        << " p_success_median=" << g.p_success_median
        << " wallclock_median_us=" << fixed3(g.wallclock_median_us) << " tts_median_us="
        << (g.tts_median_us ? fixed3(*g.tts_median_us) : std::string("unbounded")) << '\n';
  }
  return kExitOk;
}

int cmd_report(const ReportArgs& a, std::ostream& out) {
  const fs::path dir(a.sweep_dir);
  BenchConfig config;
  if (fs::exists(dir / "manifest.json")) config = read_sweep_manifest(dir);
  if (a.p_target) config.p_target = *a.p_target;
  const SweepResult sweep = load_sweep(dir, config.p_target);
  emit_report(sweep, dir, config.timing);
  out << "runs: " << sweep.runs.size() << '\n'
      << "cells: " << sweep.cells.size() << '\n'
      << "directory: " << a.sweep_dir << '\n';
  return kExitOk;
}

int cmd_oracle(const std::string& graph, std::ostream& out) {
  const Graph g = read_dimacs(fs::path(graph));
  out << "vertices: " << g.num_vertices() << '\n'
      << "chromatic_number: " << exact_chromatic_number(g) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Greedy independent-set graph coloring with classical and annealing samplers",
               "gcolor"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Config file (TOML/INI key = value; flags override it)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate planted-coloring test instances");
  gen_cmd->add_option("--sizes", gen.sizes, "Graph sizes")->delimiter(',')->capture_default_str();
  gen_cmd->add_option("--count", gen.count, "Instances per size")->capture_default_str();
  gen_cmd->add_option("--c", gen.c, "Edge density c = m/n")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  gen_cmd->add_option("--k", gen.k, "Planted colors")->check(CLI::Range(2, 64))->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Master seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output directory")->required()->envname("GCOLOR_OUT");
  gen_cmd->add_flag("--balanced", gen.balanced, "Balanced planted classes");
  gen_cmd->add_flag("--reject-bipartite", gen.reject_bipartite, "Reroll 2-colorable graphs");

  ColorArgs color;
  EngineArgs color_engine;
  auto* color_cmd = app.add_subcommand("color", "Color one DIMACS graph");
  color_cmd->add_option("--graph", color.graph, "DIMACS .col file")->required();
  color_cmd->add_option("--sampler", color.sampler, "Independent-set sampler")
      ->check(CLI::IsMember({"classical", "qubo"}))
      ->capture_default_str();
  color_cmd->add_option("--s", color.s, "Samples per iteration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  color_cmd->add_option("--seed", color.seed)->capture_default_str();
  color_cmd->add_option("--k", color.k, "Colorability parameter for the classical sampler "
                                        "(default: k_induced from .meta, else 3)");
  add_engine_options(color_cmd, color_engine);

  SweepArgs sweep;
  EngineArgs sweep_engine;
  auto* sweep_cmd = app.add_subcommand("sweep", "Benchmark sweep over instances, samplers and s");
  sweep_cmd->add_option("--instances", sweep.instances, "Instance directory from 'gen'")->required();
  sweep_cmd->add_option("--samplers", sweep.samplers)
      ->delimiter(',')
      ->check(CLI::IsMember({"classical", "qubo"}))
      ->capture_default_str();
  sweep_cmd->add_option("--s-list", sweep.s_list)->delimiter(',')->capture_default_str();
  sweep_cmd->add_option("--runs", sweep.runs, "Runs per instance and setting")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep_cmd->add_option("--p-target", sweep.p_target)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sweep_cmd->add_option("--seed", sweep.seed, "Master seed")->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "Sweep output directory")->required()->envname("GCOLOR_OUT");
  sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads (default: all cores)")
      ->envname("GCOLOR_JOBS");
  add_engine_options(sweep_cmd, sweep_engine);

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "Rebuild statistics and plots from runs.csv");
  report_cmd->add_option("--sweep-dir", report.sweep_dir)->required();
  report_cmd->add_option("--p-target", report.p_target)->check(CLI::Range(0.0, 1.0));

  std::string oracle_graph;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact chromatic number of a small graph");
  oracle_cmd->add_option("--graph", oracle_graph, "DIMACS .col file")->required();

  std::vector<const char*> argv{"gcolor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (color_cmd->parsed()) return cmd_color(color, color_engine, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, sweep_engine, out);
    if (report_cmd->parsed()) return cmd_report(report, out);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_graph, out);
  } catch (const CapabilityError& e) {
    err << "gcolor: " << e.what() << '\n';
    return kExitCapability;
  } catch (const std::invalid_argument& e) {
    err << "gcolor: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "gcolor: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace gcolor::cli
