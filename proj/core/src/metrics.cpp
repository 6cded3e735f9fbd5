#include "gcolor/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gcolor {

double success_probability(std::span<const int> colors_used, int k_target) {
  if (colors_used.empty()) throw std::invalid_argument("success_probability: no runs");
  const auto ok = std::count_if(colors_used.begin(), colors_used.end(),
                                [k_target](int k) { return k <= k_target; });
  return static_cast<double>(ok) / static_cast<double>(colors_used.size());
}

double success_probability(std::span<const RunResult> results, int k_target) {
  std::vector<int> colors;
  colors.reserve(results.size());
  for (const auto& r : results) colors.push_back(r.coloring.num_colors());
  return success_probability(colors, k_target);
}

Micros mean_wallclock(std::span<const Micros> times) {
  if (times.empty()) throw std::invalid_argument("mean_wallclock: no runs");
  Micros total{0.0};
  for (Micros t : times) total += t;
  return total / static_cast<double>(times.size());
}

Micros mean_wallclock(std::span<const RunResult> results) {
  std::vector<Micros> times;
  times.reserve(results.size());
  for (const auto& r : results) times.push_back(r.wallclock);
  return mean_wallclock(times);
}

Repetitions repetitions_R(double p_success, double p_target) {
  if (!(p_success >= 0.0 && p_success <= 1.0)) {
    throw std::invalid_argument("repetitions_R: p_success must lie in [0,1]");
  }
  if (!(p_target > 0.0 && p_target < 1.0)) {
    throw std::invalid_argument("repetitions_R: p_target must lie in (0,1)");
  }
  if (p_success == 0.0) return std::nullopt;
  if (p_success == 1.0) return 1;
  const double ratio = std::log1p(-p_target) / std::log1p(-p_success);
  const double nearest = std::round(ratio);
  const double r = std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, nearest) ? nearest
                                                                                : std::ceil(ratio);
  return static_cast<std::uint64_t>(std::max(1.0, r));
}

std::optional<Micros> time_to_solution(double p_success, Micros t_wallclock, double p_target) {
  const Repetitions r = repetitions_R(p_success, p_target);
  if (!r) return std::nullopt;
  return static_cast<double>(*r) * t_wallclock;
}

double percentile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("percentile of empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q / 100.0 * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + (values[hi] - values[lo]) * frac;
}

double median(std::vector<double> values) { return percentile(std::move(values), 50.0); }

double stddev(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("stddev of empty sample");
  const double mean =
      std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size()));
}

std::optional<double> median_with_unbounded(std::span<const std::optional<double>> values) {
  if (values.empty()) throw std::invalid_argument("median of empty group");
  std::vector<double> finite;
  for (const auto& v : values)
    if (v) finite.push_back(*v);
  const std::size_t unbounded = values.size() - finite.size();
  if (2 * unbounded >= values.size()) return std::nullopt;
  return median(std::move(finite));
}

}  // namespace gcolor
