#include "gcolor/classical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gcolor {

namespace {

using Members = std::vector<Vertex>;

struct Split {
  Members clique;
  Members independent;
};

// Candidate lists are kept in ascending id order so LowestId is cand.front().
Split ramsey_on(const Graph& g, const Members& cand, Rng& rng, PivotRule pivot) {
  if (cand.empty()) return {};
  const Vertex v =
      pivot == PivotRule::Random ? cand[rng.uniform_index(cand.size())] : cand.front();

  Members nbr;
  Members non_nbr;
  for (Vertex w : cand) {
    if (w == v) continue;
    (g.adjacent(v, w) ? nbr : non_nbr).push_back(w);
  }
  Split in_nbr = ramsey_on(g, nbr, rng, pivot);
  Split in_non = ramsey_on(g, non_nbr, rng, pivot);

  Split out;
  if (in_nbr.clique.size() + 1 >= in_non.clique.size()) {
    out.clique = std::move(in_nbr.clique);
    out.clique.push_back(v);
  } else {
    out.clique = std::move(in_non.clique);
  }
  if (in_nbr.independent.size() >= in_non.independent.size() + 1) {
    out.independent = std::move(in_nbr.independent);
  } else {
    out.independent = std::move(in_non.independent);
    out.independent.push_back(v);
  }
  return out;
}

struct Removal {
  Members independent;
  std::vector<Members> cliques;
};

Removal clique_removal_on(const Graph& g, Members cand, Rng& rng, PivotRule pivot) {
  Removal out;
  while (!cand.empty()) {
    Split r = ramsey_on(g, cand, rng, pivot);
    if (r.independent.size() > out.independent.size()) out.independent = r.independent;
    std::sort(r.clique.begin(), r.clique.end());
    Members rest;
    rest.reserve(cand.size() - r.clique.size());
    std::set_difference(cand.begin(), cand.end(), r.clique.begin(), r.clique.end(),
                        std::back_inserter(rest));
    cand = std::move(rest);
    out.cliques.push_back(std::move(r.clique));
  }
  return out;
}

Members all_vertices(const Graph& g) { return VertexSet::range(g.num_vertices()).members(); }

bool independent_in(const Graph& g, const Members& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

Members draw_seed_set(const Members& cand, std::size_t size, Rng& rng) {
  Members pool = cand;
  for (std::size_t i = 0; i < size; ++i) {
    std::swap(pool[i], pool[i + rng.uniform_index(pool.size() - i)]);
  }
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Members non_neighborhood_in(const Graph& g, const Members& cand, const Members& s) {
  Members out;
  for (Vertex w : cand) {
    bool keep = !std::binary_search(s.begin(), s.end(), w);
    for (std::size_t i = 0; keep && i < s.size(); ++i) keep = !g.adjacent(s[i], w);
    if (keep) out.push_back(w);
  }
  return out;
}

Members merged(const Members& a, const Members& b) {
  Members out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Members sample_is_on(const Graph& g, const Members& cand, const SamplerParams& params,
                     Rng& rng) {
  if (cand.size() <= 1) return cand;
  const SampleIsThresholds th = sample_is_thresholds(cand.size(), params.k);

  auto fallback = [&](Members best) {
    Members cr = clique_removal_on(g, cand, rng, params.pivot).independent;
    std::sort(cr.begin(), cr.end());
    return best.size() > cr.size() ? best : cr;
  };
  if (th.guarded) return fallback({});

  Members best;
  for (int attempt = 0; attempt < params.max_retries; ++attempt) {
    Members seed = draw_seed_set(cand, th.seed_size, rng);
    if (!independent_in(g, seed)) continue;
    Members rest = non_neighborhood_in(g, cand, seed);
    if (static_cast<double>(rest.size()) >= th.recurse_threshold) {
      return merged(seed, sample_is_on(g, rest, params, rng));
    }
    Members cr = clique_removal_on(g, rest, rng, params.pivot).independent;
    std::sort(cr.begin(), cr.end());
    Members candidate = merged(seed, cr);
    if (static_cast<double>(candidate.size()) >= th.accept_threshold) return candidate;
    if (candidate.size() > best.size()) best = std::move(candidate);
  }
  return fallback(std::move(best));
}

}  // namespace

RamseyResult ramsey(const Graph& g, Rng& rng, PivotRule pivot) {
  Split s = ramsey_on(g, all_vertices(g), rng, pivot);
  return {VertexSet(std::move(s.clique)), VertexSet(std::move(s.independent))};
}

CliqueRemovalResult clique_removal(const Graph& g, Rng& rng, PivotRule pivot) {
  Removal r = clique_removal_on(g, all_vertices(g), rng, pivot);
  CliqueRemovalResult out;
  out.independent_set = VertexSet(std::move(r.independent));
  out.cliques.reserve(r.cliques.size());
  for (auto& c : r.cliques) out.cliques.emplace_back(std::move(c));
  return out;
}

SampleIsThresholds sample_is_thresholds(std::size_t n, int k) {
  if (k < 2) throw std::invalid_argument("sample_is: k must be >= 2");
  SampleIsThresholds th;
  if (n == 0) return th;
  // 1e-9 absorbs rounding when n is an exact power of k.
  const double log_k_n = std::log(static_cast<double>(n)) / std::log(static_cast<double>(k));
  th.seed_size = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::ceil(log_k_n - 1e-9)), 1, n);
  if (n < 3) {
    th.guarded = true;
    return th;
  }
  const double ln_n = std::log(static_cast<double>(n));
  const double lnln_n = std::log(ln_n);
  th.recurse_threshold = static_cast<double>(n) / k * ln_n / (2.0 * lnln_n);
  th.accept_threshold = ln_n * ln_n * ln_n / (6.0 * lnln_n);
  th.guarded = !(th.recurse_threshold > 0.0 && th.accept_threshold > 0.0);
  return th;
}

VertexSet sample_is(const Graph& g, const SamplerParams& params, Rng& rng) {
  if (params.k < 2) throw std::invalid_argument("sample_is: k must be >= 2");
  if (params.max_retries < 1) throw std::invalid_argument("sample_is: max_retries must be >= 1");
  return VertexSet(sample_is_on(g, all_vertices(g), params, rng));
}

std::vector<VertexSet> classical_sample_batch(const Graph& g, std::size_t s,
                                              const SamplerParams& params, Rng& rng) {
  if (s < 1) throw std::invalid_argument("classical_sample_batch: s must be >= 1");
  std::vector<VertexSet> out;
  out.reserve(s);
  for (std::size_t i = 0; i < s; ++i) out.push_back(sample_is(g, params, rng));
  return out;
}

}  // namespace gcolor
