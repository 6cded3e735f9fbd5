#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gcolor/anneal.hpp"
#include "gcolor/greedy.hpp"

namespace gcolor {

/// Repetition count R; std::nullopt means unbounded (success never observed).
using Repetitions = std::optional<std::uint64_t>;

/// Fraction of runs whose color count is at most k_target.
/// Throws std::invalid_argument on empty input.
double success_probability(std::span<const int> colors_used, int k_target);
double success_probability(std::span<const RunResult> results, int k_target);

/// Arithmetic mean. Throws std::invalid_argument on empty input.
Micros mean_wallclock(std::span<const Micros> times);
Micros mean_wallclock(std::span<const RunResult> results);

/// ceil(ln(1 - p_target) / ln(1 - p_success)), at least 1; unbounded for
/// p_success == 0 and 1 for p_success == 1. A ratio within 1e-9 (relative)
/// of an integer rounds to that integer rather than up past it.
Repetitions repetitions_R(double p_success, double p_target);

/// R * t_wallclock; unbounded when R is.
std::optional<Micros> time_to_solution(double p_success, Micros t_wallclock, double p_target);

// Order statistics over finite samples. Percentiles interpolate linearly
// between closest ranks (q in [0,100]).
double median(std::vector<double> values);
double percentile(std::vector<double> values, double q);
/// Population standard deviation.
double stddev(std::span<const double> values);

/// Median of a group where some members are unbounded (nullopt). Unbounded
/// members are dropped when they are fewer than half of the group; otherwise
/// the median itself is unbounded.
std::optional<double> median_with_unbounded(std::span<const std::optional<double>> values);

}  // namespace gcolor
