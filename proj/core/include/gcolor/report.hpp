#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gcolor/anneal.hpp"
#include "gcolor/sweep.hpp"

namespace gcolor {

/// runs.csv header, in column order.
inline constexpr const char* kRunsCsvHeader =
    "instance_id,n,c,k_induced,sampler,s,run_index,seed,colors_used,success,wallclock_us,"
    "qpu_modeled_us,k_iterations,rejected_rounds";
inline constexpr const char* kStatsCsvHeader =
    "instance_id,n,c,k_induced,sampler,s,runs,successes,p_success,wallclock_mean_us,"
    "wallclock_median_us,wallclock_sigma_us,wallclock_p40_us,wallclock_p60_us,repetitions,"
    "tts_us";
inline constexpr const char* kGroupsCsvHeader =
    "n,sampler,s,instances,p_success_median,p_success_p40,p_success_p60,wallclock_median_us,"
    "wallclock_mean_us,wallclock_sigma_us,tts_median_us,tts_low_us,tts_high_us,"
    "tts_unbounded_instances";
inline constexpr const char* kColoringsCsvHeader = "instance_id,sampler,s,run_index,coloring";

std::string format_run_row(const RunRecord& r);
/// Unbounded repetitions and TTS are written as empty fields.
std::string format_stats_row(const InstanceStats& s);
std::string format_group_row(const GroupStats& g);
std::string format_coloring_row(const RunRecord& r);

/// Parses one runs.csv data row (without coloring). Throws ParseError.
RunRecord parse_run_row(const std::string& line, std::size_t line_no);

void write_runs_csv(const std::filesystem::path& path, std::span<const RunRecord> runs);
void write_colorings_csv(const std::filesystem::path& path, std::span<const RunRecord> runs);
/// Reads runs.csv and, when present next to it, attaches colorings.csv.
std::vector<RunRecord> read_runs_csv(const std::filesystem::path& path);

/// Writes runs.csv, colorings.csv, stats.csv, groups.csv and the SVG figures:
/// success/wallclock/TTS against s and against n, and a stacked timing
/// breakdown of the hybrid runs at the smallest s. Throws std::runtime_error
/// naming the file when the directory is not writable.
void emit_report(const SweepResult& sweep, const std::filesystem::path& dir,
                 const TimingConstants& timing = {});

/// Rebuilds statistics and figures from a sweep directory's runs.csv alone.
SweepResult load_sweep(const std::filesystem::path& dir, double p_target);

}  // namespace gcolor
