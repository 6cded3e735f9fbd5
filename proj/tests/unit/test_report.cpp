#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gcolor/error.hpp"
#include "gcolor/report.hpp"
#include "gcolor/sweep.hpp"

using namespace gcolor;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> read_lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

// One small sweep shared by every test in this file.
class ReportTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / "gcolor_test_report";
    fs::remove_all(dir_);
    InstanceSetParams p;
    p.sizes = {12, 20};
    p.per_size = 3;
    set_ = new InstanceSet(generate_test_set(p));
    BenchConfig c;
    c.s_values = {1, 10};
    c.runs = 4;
    c.schedule.sweeps = 100;
    sweep_ = new SweepResult(run_sweep(c, *set_));
    emit_report(*sweep_, dir_);
  }
  static void TearDownTestSuite() {
    delete sweep_;
    delete set_;
    fs::remove_all(dir_);
  }

  static fs::path dir_;
  static InstanceSet* set_;
  static SweepResult* sweep_;
};

fs::path ReportTest::dir_;
InstanceSet* ReportTest::set_ = nullptr;
SweepResult* ReportTest::sweep_ = nullptr;

}  // namespace

TEST_F(ReportTest, FilesAndHeaders) {
  for (const char* name :
       {"runs.csv", "colorings.csv", "stats.csv", "groups.csv", "success_vs_s.svg",
        "wallclock_vs_s.svg", "tts_vs_s.svg", "success_vs_n.svg", "wallclock_vs_n.svg",
        "tts_vs_n.svg", "timing_breakdown.svg"}) {
    EXPECT_TRUE(fs::exists(dir_ / name)) << name;
  }
  EXPECT_EQ(read_lines(dir_ / "runs.csv").front(), kRunsCsvHeader);
  EXPECT_EQ(read_lines(dir_ / "runs.csv").size(), sweep_->runs.size() + 1);
  EXPECT_EQ(read_lines(dir_ / "stats.csv").front(), kStatsCsvHeader);
  EXPECT_EQ(read_lines(dir_ / "stats.csv").size(), sweep_->cells.size() + 1);
  EXPECT_EQ(read_lines(dir_ / "groups.csv").front(), kGroupsCsvHeader);
  EXPECT_EQ(read_lines(dir_ / "colorings.csv").front(), kColoringsCsvHeader);
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (e.path().extension() != ".svg") continue;
    const auto lines = read_lines(e.path());
    ASSERT_FALSE(lines.empty());
    EXPECT_NE(lines.front().find("<svg"), std::string::npos) << e.path();
    EXPECT_NE(lines.back().find("</svg>"), std::string::npos) << e.path();
  }
}

TEST_F(ReportTest, RunRowFormat) {
  const auto lines = read_lines(dir_ / "runs.csv");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i]);
    ASSERT_EQ(f.size(), 14U) << lines[i];
    EXPECT_TRUE(f[9] == "0" || f[9] == "1");
    EXPECT_EQ(f[11].empty(), f[4] == "classical");
  }
}

TEST_F(ReportTest, StatsRecomputeFromRunsCsv) {
  const std::vector<RunRecord> runs = read_runs_csv(dir_ / "runs.csv");
  const auto cells = compute_instance_stats(runs, 0.99);
  const auto lines = read_lines(dir_ / "stats.csv");
  ASSERT_EQ(lines.size(), cells.size() + 1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    EXPECT_EQ(format_stats_row(cells[i]), lines[i + 1]);
  }
}

TEST_F(ReportTest, TtsColumnIsRTimesMeanWallclock) {
  const std::vector<RunRecord> runs = read_runs_csv(dir_ / "runs.csv");
  const auto lines = read_lines(dir_ / "stats.csv");
  const auto header = split(kStatsCsvHeader);
  const auto col = [&](const char* name) {
    return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) -
                                    header.begin());
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i]);
    ASSERT_EQ(f.size(), header.size());
    double sum = 0.0;
    std::size_t count = 0;
    std::size_t ok = 0;
    for (const auto& r : runs) {
      if (r.instance_id != f[col("instance_id")] || r.sampler != f[col("sampler")] ||
          std::to_string(r.s) != f[col("s")]) {
        continue;
      }
      sum += r.wallclock_us;
      ++count;
      ok += r.success;
    }
    ASSERT_GT(count, 0U);
    const double mean = sum / static_cast<double>(count);
    EXPECT_NEAR(std::stod(f[col("wallclock_mean_us")]), mean, 1e-9 * mean);
    if (ok == 0) {
      EXPECT_TRUE(f[col("tts_us")].empty());
      EXPECT_TRUE(f[col("repetitions")].empty());
      continue;
    }
    const double p = static_cast<double>(ok) / static_cast<double>(count);
    const double ratio = std::log(0.01) / std::log(1.0 - p);
    double R = p == 1.0 ? 1.0 : std::ceil(ratio - 1e-9 * ratio);
    R = std::max(R, 1.0);
    EXPECT_EQ(std::stod(f[col("repetitions")]), R);
    EXPECT_NEAR(std::stod(f[col("tts_us")]), R * mean, 1e-9 * R * mean);
  }
}

TEST_F(ReportTest, SuccessMatchesStoredColorings) {
  const std::vector<RunRecord> runs = read_runs_csv(dir_ / "runs.csv");
  ASSERT_EQ(runs.size(), sweep_->runs.size());
  for (const auto& r : runs) {
    const auto it = std::find_if(set_->instances.begin(), set_->instances.end(),
                                 [&](const auto& inst) { return inst.instance_id == r.instance_id; });
    ASSERT_NE(it, set_->instances.end());
    ASSERT_EQ(r.coloring.size(), it->n);
    const Coloring c(r.coloring);
    EXPECT_TRUE(is_proper_coloring(it->graph, c));
    EXPECT_EQ(c.num_colors(), r.colors_used);
    EXPECT_EQ(r.success, c.num_colors() <= it->k_induced);
  }
}

TEST_F(ReportTest, LoadSweepReproducesOutputs) {
  const fs::path copy = dir_.string() + "_reload";
  fs::remove_all(copy);
  fs::create_directories(copy);
  fs::copy_file(dir_ / "runs.csv", copy / "runs.csv");
  fs::copy_file(dir_ / "colorings.csv", copy / "colorings.csv");
  const SweepResult loaded = load_sweep(copy, 0.99);
  emit_report(loaded, copy);
  for (const char* name : {"runs.csv", "colorings.csv", "stats.csv", "groups.csv"}) {
    EXPECT_EQ(read_lines(copy / name), read_lines(dir_ / name)) << name;
  }
  fs::remove_all(copy);
}

TEST_F(ReportTest, GroupsCoverGrid) {
  EXPECT_EQ(sweep_->groups.size(), 2U * 2 * 2);
  for (const auto& g : sweep_->groups) {
    EXPECT_EQ(g.instances, 3U);
    EXPECT_LE(g.p_success_p40, g.p_success_p60);
    EXPECT_GE(g.p_success_median, 0.0);
    EXPECT_LE(g.p_success_median, 1.0);
  }
}

TEST(Report, ParseRunRowErrors) {
  EXPECT_THROW(parse_run_row("a,b,c", 2), ParseError);
  try {
    parse_run_row("x,20,4.5,3,qubo,1,0,7,3,maybe,1.0,370.0,3,0", 5);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5U);
  }
  const RunRecord r = parse_run_row("x,20,4.5,3,classical,1,0,7,3,1,1.500,,3,0", 2);
  EXPECT_EQ(r.instance_id, "x");
  EXPECT_TRUE(r.success);
  EXPECT_FALSE(r.qpu_modeled_us);
  EXPECT_EQ(format_run_row(r), "x,20,4.5,3,classical,1,0,7,3,1,1.500,,3,0");
}

TEST(Report, UnwritableDirectory) {
  SweepResult empty;
  EXPECT_THROW(emit_report(empty, "/proc/gcolor_not_writable"), std::runtime_error);
}
