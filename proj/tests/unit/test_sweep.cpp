#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "gcolor/report.hpp"
#include "gcolor/sweep.hpp"

using namespace gcolor;
namespace fs = std::filesystem;

namespace {

InstanceSet small_set(std::vector<std::size_t> sizes, std::size_t per_size) {
  InstanceSetParams p;
  p.sizes = std::move(sizes);
  p.per_size = per_size;
  return generate_test_set(p);
}

BenchConfig fast_config() {
  BenchConfig c;
  c.s_values = {1, 10};
  c.runs = 3;
  c.schedule.sweeps = 100;
  return c;
}

fs::path temp_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("gcolor_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// Run rows with the timing columns blanked.
std::vector<std::string> untimed_rows(const std::vector<RunRecord>& runs) {
  std::vector<std::string> rows;
  for (RunRecord r : runs) {
    r.wallclock_us = 0.0;
    if (r.qpu_modeled_us) r.qpu_modeled_us = 0.0;
    rows.push_back(format_run_row(r) + "|" + format_coloring_row(r));
  }
  return rows;
}

}  // namespace

TEST(BenchConfig, Defaults) {
  const BenchConfig c;
  EXPECT_EQ(c.s_values, (std::vector<std::size_t>{1, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100}));
  EXPECT_EQ(c.runs, 20U);
  EXPECT_DOUBLE_EQ(c.p_target, 0.99);
  EXPECT_EQ(c.retry_cap, 10U);
  EXPECT_NO_THROW(c.validate());
}

TEST(BenchConfig, Validation) {
  BenchConfig c;
  c.s_values.clear();
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.runs = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.p_target = 1.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.samplers = {"quantum"};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.schedule.sweeps = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  EXPECT_THROW(run_sweep(c, small_set({12}, 1)), std::invalid_argument);
}

TEST(Sweep, CountingContract) {
  BenchConfig c;
  c.s_values = {1, 30};
  c.runs = 20;
  c.schedule.sweeps = 20;
  const SweepResult r = run_sweep(c, small_set({20}, 20));
  EXPECT_EQ(r.runs.size(), 1600U);
  EXPECT_EQ(r.cells.size(), 80U);
  EXPECT_EQ(r.groups.size(), 4U);
}

TEST(Sweep, RowOrderAndSeeds) {
  const BenchConfig c = fast_config();
  const InstanceSet set = small_set({12}, 2);
  const SweepResult r = run_sweep(c, set);
  ASSERT_EQ(r.runs.size(), 2U * 2 * 2 * 3);
  std::size_t i = 0;
  std::set<std::uint64_t> seeds;
  for (const auto& inst : set.instances)
    for (const auto& sampler : c.samplers)
      for (std::size_t s : c.s_values)
        for (std::size_t run = 0; run < c.runs; ++run, ++i) {
          const RunRecord& rec = r.runs[i];
          EXPECT_EQ(rec.instance_id, inst.instance_id);
          EXPECT_EQ(rec.sampler, sampler);
          EXPECT_EQ(rec.s, s);
          EXPECT_EQ(rec.run_index, run);
          EXPECT_EQ(rec.seed, derive_run_seed(c.master_seed, inst.instance_id, sampler, s, run));
          EXPECT_EQ(rec.success, rec.colors_used <= rec.k_induced);
          EXPECT_EQ(rec.qpu_modeled_us.has_value(), sampler == "qubo");
          EXPECT_EQ(rec.k_iterations, static_cast<std::size_t>(rec.colors_used));
          Coloring coloring(rec.coloring);
          EXPECT_TRUE(is_proper_coloring(inst.graph, coloring));
          EXPECT_EQ(coloring.num_colors(), rec.colors_used);
          seeds.insert(rec.seed);
        }
  EXPECT_EQ(seeds.size(), r.runs.size());
}

TEST(Sweep, DeterministicAcrossJobs) {
  BenchConfig c = fast_config();
  const InstanceSet set = small_set({12, 20}, 2);
  const SweepResult a = run_sweep(c, set);
  c.jobs = 3;
  const SweepResult b = run_sweep(c, set);
  EXPECT_EQ(untimed_rows(a.runs), untimed_rows(b.runs));
  ASSERT_EQ(a.cells.size(), b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    EXPECT_EQ(a.cells[i].p_success, b.cells[i].p_success);
    EXPECT_EQ(a.cells[i].repetitions, b.cells[i].repetitions);
  }
}

TEST(Sweep, JournalResume) {
  const fs::path dir = temp_dir("journal");
  const BenchConfig c = fast_config();
  const InstanceSet set = small_set({12}, 2);
  const SweepResult full = run_sweep(c, set, dir);

  const SweepResult reloaded = run_sweep(c, set, dir);
  ASSERT_EQ(reloaded.runs.size(), full.runs.size());
  for (std::size_t i = 0; i < full.runs.size(); ++i) {
    EXPECT_EQ(format_run_row(reloaded.runs[i]), format_run_row(full.runs[i]));
  }

  // Losing half the cells, as an interrupted sweep would, reruns only those.
  std::size_t removed = 0;
  for (const auto& e : fs::directory_iterator(dir / "cells")) {
    if (removed++ % 2 == 0) fs::remove(e.path());
  }
  const SweepResult resumed = run_sweep(c, set, dir);
  EXPECT_EQ(untimed_rows(resumed.runs), untimed_rows(full.runs));

  BenchConfig other = c;
  other.master_seed = 1;
  EXPECT_THROW(run_sweep(other, set, dir), std::invalid_argument);
  fs::remove_all(dir);
}

TEST(Sweep, ManifestRoundTrip) {
  const fs::path dir = temp_dir("manifest");
  BenchConfig c = fast_config();
  c.p_target = 0.9;
  c.timing.program = Micros{12.5};
  c.decode = DecodeMode::Repair;
  c.backend = "random";
  const InstanceSet set = small_set({12}, 1);
  write_sweep_manifest(dir, c, "instances", set);
  const BenchConfig back = read_sweep_manifest(dir);
  EXPECT_EQ(back.s_values, c.s_values);
  EXPECT_EQ(back.runs, c.runs);
  EXPECT_DOUBLE_EQ(back.p_target, 0.9);
  EXPECT_EQ(back.timing.program.count(), 12.5);
  EXPECT_EQ(back.decode, DecodeMode::Repair);
  EXPECT_EQ(back.backend, "random");
  EXPECT_EQ(back.schedule.sweeps, c.schedule.sweeps);
  fs::remove_all(dir);
}

TEST(Stats, InstanceStatsFromRecords) {
  std::vector<RunRecord> runs;
  for (std::size_t i = 0; i < 4; ++i) {
    RunRecord r;
    r.instance_id = "x";
    r.n = 20;
    r.k_induced = 3;
    r.sampler = "classical";
    r.s = 1;
    r.run_index = i;
    r.colors_used = i < 2 ? 3 : 4;
    r.success = r.colors_used <= 3;
    r.wallclock_us = 10.0 * static_cast<double>(i + 1);
    runs.push_back(r);
  }
  const auto cells = compute_instance_stats(runs, 0.99);
  ASSERT_EQ(cells.size(), 1U);
  EXPECT_EQ(cells[0].successes, 2U);
  EXPECT_DOUBLE_EQ(cells[0].p_success, 0.5);
  EXPECT_DOUBLE_EQ(cells[0].wallclock_mean_us, 25.0);
  EXPECT_DOUBLE_EQ(cells[0].wallclock_median_us, 25.0);
  EXPECT_EQ(cells[0].repetitions, 7U);
  ASSERT_TRUE(cells[0].tts_us);
  EXPECT_DOUBLE_EQ(*cells[0].tts_us, 175.0);

  for (auto& r : runs) {
    r.colors_used = 5;
    r.success = false;
  }
  const auto none = compute_instance_stats(runs, 0.99);
  EXPECT_FALSE(none[0].repetitions);
  EXPECT_FALSE(none[0].tts_us);
}

TEST(Stats, QuantizeMicros) {
  EXPECT_DOUBLE_EQ(quantize_us(1.23449), 1.234);
  EXPECT_DOUBLE_EQ(quantize_us(1.2346), 1.235);
}
