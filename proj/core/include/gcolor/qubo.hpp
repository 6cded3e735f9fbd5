#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "gcolor/graph.hpp"

namespace gcolor {

/// Binary assignment, one entry (0 or 1) per QUBO variable.
using Assignment = std::vector<std::uint8_t>;

/// Quadratic unconstrained binary objective
///   offset + sum_i linear[i] x_i + sum_{i<j} quadratic[(i,j)] x_i x_j.
/// Quadratic keys are stored as (min, max); zero coefficients are not stored.
class Qubo {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;

  Qubo() = default;
  explicit Qubo(std::size_t n_vars) : linear_(n_vars, 0.0) {}

  std::size_t num_vars() const noexcept { return linear_.size(); }
  const std::vector<double>& linear() const noexcept { return linear_; }
  const std::map<Key, double>& quadratic() const noexcept { return quadratic_; }
  double offset() const noexcept { return offset_; }

  void add_linear(std::size_t i, double value);
  /// i != j, either order. A coefficient that sums to zero is erased.
  void add_quadratic(std::size_t i, std::size_t j, double value);
  void add_offset(double value) { offset_ += value; }

  double quadratic_at(std::size_t i, std::size_t j) const;

  /// Throws std::invalid_argument on length mismatch.
  double energy(std::span<const std::uint8_t> x) const;

 private:
  std::vector<double> linear_;
  std::map<Key, double> quadratic_;
  double offset_ = 0.0;
};

/// -sum x_i + alpha * sum_{(i,j) in E} x_i x_j, one variable per vertex.
/// Throws std::invalid_argument for alpha < 2.
Qubo mis_qubo(const Graph& g, double alpha = 2.0);

/// Variable index of "vertex i has color c" in gc_qubo.
inline std::size_t gc_variable(std::size_t vertex, std::size_t color, std::size_t k) {
  return vertex * k + color;
}

/// Expanded one-hot coloring penalty
///   sum_i (1 - sum_c b_ic)^2 + sum_{(i,j) in E} sum_c b_ic b_jc
/// over k*n variables indexed by gc_variable. Zero exactly on proper k-colorings.
Qubo gc_qubo(const Graph& g, int k);

/// Support of an assignment as a vertex set.
VertexSet support(std::span<const std::uint8_t> x);
Assignment indicator(std::size_t n, const VertexSet& s);

struct BruteForceMinima {
  double min_energy = 0.0;
  std::vector<Assignment> argmins;  ///< ascending lexicographic order
};

inline constexpr std::size_t kBruteForceMaxVars = 24;

/// Exhaustive scan of all 2^n assignments. Throws CapabilityError above
/// kBruteForceMaxVars. Energies within 1e-9 of the minimum count as minimal.
BruteForceMinima brute_force_minima(const Qubo& q);

}  // namespace gcolor
