#include "gcolor/qubo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gcolor/error.hpp"

namespace gcolor {

void Qubo::add_linear(std::size_t i, double value) {
  if (i >= linear_.size()) throw std::out_of_range("qubo variable out of range");
  linear_[i] += value;
}

void Qubo::add_quadratic(std::size_t i, std::size_t j, double value) {
  if (i >= linear_.size() || j >= linear_.size()) {
    throw std::out_of_range("qubo variable out of range");
  }
  if (i == j) throw std::invalid_argument("quadratic term needs two distinct variables");
  const Key key{static_cast<std::uint32_t>(std::min(i, j)),
                static_cast<std::uint32_t>(std::max(i, j))};
  auto [it, inserted] = quadratic_.try_emplace(key, 0.0);
  it->second += value;
  if (it->second == 0.0) quadratic_.erase(it);
}

double Qubo::quadratic_at(std::size_t i, std::size_t j) const {
  const Key key{static_cast<std::uint32_t>(std::min(i, j)),
                static_cast<std::uint32_t>(std::max(i, j))};
  auto it = quadratic_.find(key);
  return it == quadratic_.end() ? 0.0 : it->second;
}

double Qubo::energy(std::span<const std::uint8_t> x) const {
  if (x.size() != linear_.size()) {
    throw std::invalid_argument("assignment has " + std::to_string(x.size()) +
                                " entries, qubo has " + std::to_string(linear_.size()) +
                                " variables");
  }
  double e = offset_;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) e += linear_[i];
  for (const auto& [key, w] : quadratic_)
    if (x[key.first] && x[key.second]) e += w;
  return e;
}

Qubo mis_qubo(const Graph& g, double alpha) {
  if (!(alpha >= 2.0)) throw std::invalid_argument("mis_qubo: alpha must be >= 2");
  Qubo q(g.num_vertices());
  for (std::size_t i = 0; i < g.num_vertices(); ++i) q.add_linear(i, -1.0);
  for (const Edge& e : g.edges()) q.add_quadratic(e.u, e.v, alpha);
  return q;
}

Qubo gc_qubo(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("gc_qubo: k must be >= 1");
  const std::size_t kk = static_cast<std::size_t>(k);
  const std::size_t n = g.num_vertices();
  Qubo q(n * kk);
  // (1 - sum_c b)^2 = 1 - sum_c b + 2 sum_{c<d} b_c b_d for binary b.
  for (std::size_t i = 0; i < n; ++i) {
    q.add_offset(1.0);
    for (std::size_t c = 0; c < kk; ++c) {
      q.add_linear(gc_variable(i, c, kk), -1.0);
      for (std::size_t d = c + 1; d < kk; ++d)
        q.add_quadratic(gc_variable(i, c, kk), gc_variable(i, d, kk), 2.0);
    }
  }
  for (const Edge& e : g.edges())
    for (std::size_t c = 0; c < kk; ++c)
      q.add_quadratic(gc_variable(e.u, c, kk), gc_variable(e.v, c, kk), 1.0);
  return q;
}

VertexSet support(std::span<const std::uint8_t> x) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) out.push_back(static_cast<Vertex>(i));
  return VertexSet(std::move(out));
}

Assignment indicator(std::size_t n, const VertexSet& s) {
  Assignment x(n, 0);
  for (Vertex v : s) x.at(v) = 1;
  return x;
}

BruteForceMinima brute_force_minima(const Qubo& q) {
  const std::size_t n = q.num_vars();
  if (n > kBruteForceMaxVars) {
    throw CapabilityError("brute_force_minima: " + std::to_string(n) +
                          " variables exceeds the cap of " + std::to_string(kBruteForceMaxVars));
  }
  // Gray-code walk: one bit flips per step, energy updated from local fields.
  std::vector<std::vector<std::pair<std::uint32_t, double>>> nbrs(n);
  for (const auto& [key, w] : q.quadratic()) {
    nbrs[key.first].emplace_back(key.second, w);
    nbrs[key.second].emplace_back(key.first, w);
  }
  Assignment x(n, 0);
  double e = q.offset();
  constexpr double kTol = 1e-9;
  BruteForceMinima out;
  out.min_energy = e;
  std::vector<std::uint64_t> codes{0};

  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < total; ++step) {
    const std::size_t bit = static_cast<std::size_t>(std::countr_zero(step));
    double field = q.linear()[bit];
    for (const auto& [j, w] : nbrs[bit])
      if (x[j]) field += w;
    e += x[bit] ? -field : field;
    x[bit] ^= 1U;
    gray ^= std::uint64_t{1} << bit;
    if (e < out.min_energy - kTol) {
      out.min_energy = e;
      codes.assign(1, gray);
    } else if (std::abs(e - out.min_energy) <= kTol) {
      codes.push_back(gray);
    }
  }
  // Recompute exactly, dropping codes that drifted outside tolerance of the final minimum.
  double exact_min = 0.0;
  bool first = true;
  std::vector<std::pair<double, std::uint64_t>> scored;
  for (std::uint64_t code : codes) {
    Assignment a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = (code >> i) & 1U;
    const double ea = q.energy(a);
    scored.emplace_back(ea, code);
    if (first || ea < exact_min) exact_min = ea;
    first = false;
  }
  out.min_energy = exact_min;
  std::vector<Assignment> argmins;
  for (const auto& [ea, code] : scored) {
    if (std::abs(ea - exact_min) > kTol) continue;
    Assignment a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = (code >> i) & 1U;
    argmins.push_back(std::move(a));
  }
  std::sort(argmins.begin(), argmins.end());
  out.argmins = std::move(argmins);
  return out;
}

}  // namespace gcolor
