#include "gcolor/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "gcolor/error.hpp"

namespace gcolor {

namespace {

using Mask = std::uint64_t;

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g) : n_(g.num_vertices()), adj_(n_, 0), color_(n_, -1) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= Mask{1} << e.v;
      adj_[e.v] |= Mask{1} << e.u;
    }
  }

  int solve() {
    if (n_ == 0) return 0;
    best_ = greedy_upper_bound();
    lower_ = greedy_clique();
    if (lower_ < best_) search(0, 0);
    return best_;
  }

 private:
  // Vertex with the most distinct neighbor colors, then most uncolored neighbors.
  int pick_vertex(Mask colored) const {
    int pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colored >> v & 1U) continue;
      Mask used = 0;
      for (Mask nb = adj_[v] & colored; nb; nb &= nb - 1) used |= Mask{1} << color_[std::countr_zero(nb)];
      const int sat = std::popcount(used);
      const int deg = std::popcount(adj_[v] & ~colored);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = static_cast<int>(v);
        best_sat = sat;
        best_deg = deg;
      }
    }
    return pick;
  }

  bool color_ok(int v, int c) const {
    for (Mask nb = adj_[v]; nb; nb &= nb - 1)
      if (color_[std::countr_zero(nb)] == c) return false;
    return true;
  }

  void search(Mask colored, int used) {
    if (best_ == lower_) return;
    if (std::popcount(colored) == static_cast<int>(n_)) {
      if (used < best_) best_ = used;
      return;
    }
    const int v = pick_vertex(colored);
    const int limit = std::min(used + 1, best_ - 1);
    for (int c = 0; c < limit; ++c) {
      if (!color_ok(v, c)) continue;
      color_[v] = c;
      search(colored | Mask{1} << v, std::max(used, c + 1));
      color_[v] = -1;
      if (best_ == lower_) return;
    }
  }

  int greedy_upper_bound() {
    Mask colored = 0;
    int used = 0;
    for (std::size_t step = 0; step < n_; ++step) {
      const int v = pick_vertex(colored);
      int c = 0;
      while (!color_ok(v, c)) ++c;
      color_[v] = c;
      used = std::max(used, c + 1);
      colored |= Mask{1} << v;
    }
    std::fill(color_.begin(), color_.end(), -1);
    return used;
  }

  int greedy_clique() const {
    int best = 1;
    for (std::size_t start = 0; start < n_; ++start) {
      Mask cand = adj_[start];
      int size = 1;
      while (cand) {
        int pick = -1;
        int pick_deg = -1;
        for (Mask m = cand; m; m &= m - 1) {
          const int w = std::countr_zero(m);
          const int d = std::popcount(adj_[w] & cand);
          if (d > pick_deg) {
            pick = w;
            pick_deg = d;
          }
        }
        ++size;
        cand &= adj_[pick];
      }
      best = std::max(best, size);
    }
    return best;
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  std::vector<int> color_;
  int best_ = 0;
  int lower_ = 0;
};

}  // namespace

int exact_chromatic_number(const Graph& g) {
  if (g.num_vertices() > kChromaticMaxVertices) {
    throw CapabilityError("exact chromatic number is limited to " +
                          std::to_string(kChromaticMaxVertices) + " vertices, graph has " +
                          std::to_string(g.num_vertices()));
  }
  return BranchAndBound(g).solve();
}

}  // namespace gcolor
