#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gcolor/error.hpp"
#include "gcolor/instance.hpp"
#include "gcolor/rng.hpp"

namespace gcolor {

namespace fs = std::filesystem;
using nlohmann::json;

double edge_probability(std::size_t n, double c) {
  if (n == 0) throw std::invalid_argument("edge_probability: n must be >= 1");
  return std::clamp(c / static_cast<double>(n), 0.0, 1.0);
}

namespace {

std::vector<int> draw_classes(std::size_t n, int k, bool balanced, Rng& rng) {
  std::vector<int> cls(n);
  if (balanced) {
    for (std::size_t i = 0; i < n; ++i) cls[i] = static_cast<int>(i % static_cast<std::size_t>(k));
    for (std::size_t i = n; i > 1; --i) std::swap(cls[i - 1], cls[rng.uniform_index(i)]);
  } else {
    for (auto& c : cls) c = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(k)));
  }
  return cls;
}

std::size_t cross_pairs(const std::vector<int>& cls, int k) {
  std::vector<std::size_t> count(static_cast<std::size_t>(k), 0);
  for (int c : cls) ++count[c];
  const std::size_t n = cls.size();
  std::size_t same = 0;
  for (std::size_t c : count) same += c * (c - (c > 0 ? 1 : 0)) / 2;
  return n * (n - (n > 0 ? 1 : 0)) / 2 - same;
}

}  // namespace

PlantedInstance generate_planted(std::size_t n, int k_induced, double c, std::uint64_t seed,
                                 const PlantOptions& options) {
  if (k_induced < 2 || n < static_cast<std::size_t>(k_induced)) {
    throw std::invalid_argument("generate_planted requires n >= k_induced >= 2");
  }
  if (c < 0.0) throw std::invalid_argument("generate_planted: c must be non-negative");

  Rng rng(seed);
  for (int attempt = 0; attempt <= options.max_rerolls; ++attempt) {
    std::vector<int> cls = draw_classes(n, k_induced, options.balanced_classes, rng);
    const std::size_t cross = cross_pairs(cls, k_induced);
    if (cross == 0) continue;

    const double p = std::min(1.0, c * static_cast<double>(n) / static_cast<double>(cross));
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (cls[u] != cls[v] && rng.bernoulli(p)) pairs.emplace_back(u, v);

    Graph g(n, pairs);
    if (options.reject_bipartite && is_bipartite(g)) continue;

    PlantedInstance inst;
    inst.graph = std::move(g);
    inst.planted_coloring = Coloring(std::move(cls));
    inst.n = n;
    inst.c = c;
    inst.k_induced = k_induced;
    inst.seed = seed;
    return inst;
  }
  throw std::runtime_error("generate_planted: no acceptable instance after " +
                           std::to_string(options.max_rerolls) + " rerolls");
}

std::uint64_t derive_instance_seed(std::uint64_t master_seed, std::size_t size,
                                   std::size_t index) {
  return mix_seeds(mix_seeds(master_seed, size), index);
}

std::string make_instance_id(std::size_t n, int k_induced, std::size_t index) {
  std::string idx = std::to_string(index);
  if (idx.size() < 3) idx.insert(0, 3 - idx.size(), '0');
  return "n" + std::to_string(n) + "-k" + std::to_string(k_induced) + "-i" + idx;
}

InstanceSet generate_test_set(const InstanceSetParams& params) {
  if (params.sizes.empty()) throw std::invalid_argument("generate_test_set: sizes is empty");
  InstanceSet set;
  set.params = params;
  for (std::size_t n : params.sizes) {
    for (std::size_t i = 0; i < params.per_size; ++i) {
      auto inst = generate_planted(n, params.k_induced, params.c,
                                   derive_instance_seed(params.master_seed, n, i), params.options);
      inst.instance_id = make_instance_id(n, params.k_induced, i);
      set.instances.push_back(std::move(inst));
    }
  }
  return set;
}

namespace {

fs::path meta_path(const fs::path& col_path) {
  fs::path p = col_path;
  p.replace_extension(".meta");
  return p;
}

json instance_meta(const PlantedInstance& inst) {
  json j;
  j["instance_id"] = inst.instance_id;
  j["n"] = inst.n;
  j["c"] = inst.c;
  j["k_induced"] = inst.k_induced;
  j["seed"] = inst.seed;
  j["planted_coloring"] = inst.planted_coloring.assignment();
  return j;
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(0, path.string() + ": " + e.what());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

void write_instance(const fs::path& col_path, const PlantedInstance& instance) {
  write_dimacs(col_path, instance.graph);
  write_text(meta_path(col_path), instance_meta(instance).dump(2) + "\n");
}

PlantedInstance read_instance(const fs::path& col_path) {
  PlantedInstance inst;
  inst.graph = read_dimacs(col_path);
  const json meta = read_json(meta_path(col_path));
  try {
    inst.instance_id = meta.at("instance_id").get<std::string>();
    inst.n = meta.at("n").get<std::size_t>();
    inst.c = meta.at("c").get<double>();
    inst.k_induced = meta.at("k_induced").get<int>();
    inst.seed = meta.at("seed").get<std::uint64_t>();
    inst.planted_coloring = Coloring(meta.at("planted_coloring").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw ParseError(0, meta_path(col_path).string() + ": " + e.what());
  }
  if (inst.n != inst.graph.num_vertices() || inst.planted_coloring.size() != inst.n) {
    throw ParseError(0, meta_path(col_path).string() + ": vertex count disagrees with graph");
  }
  return inst;
}

void write_instance_set(const fs::path& dir, const InstanceSet& set) {
  fs::create_directories(dir);
  json manifest;
  manifest["generator"] = "planted";
  manifest["sizes"] = set.params.sizes;
  manifest["per_size"] = set.params.per_size;
  manifest["k_induced"] = set.params.k_induced;
  manifest["c"] = set.params.c;
  manifest["master_seed"] = set.params.master_seed;
  manifest["balanced_classes"] = set.params.options.balanced_classes;
  manifest["reject_bipartite"] = set.params.options.reject_bipartite;
  manifest["seed_derivation"] = "mix_seeds(mix_seeds(master_seed, n), index)";
  json files = json::array();
  for (const auto& inst : set.instances) {
    const std::string file = inst.instance_id + ".col";
    write_instance(dir / file, inst);
    files.push_back(file);
  }
  manifest["instances"] = files;
  write_text(dir / "manifest.json", manifest.dump(2) + "\n");
}

InstanceSet read_instance_set(const fs::path& dir) {
  InstanceSet set;
  std::vector<fs::path> files;
  const fs::path manifest_path = dir / "manifest.json";
  if (fs::exists(manifest_path)) {
    const json m = read_json(manifest_path);
    try {
      set.params.sizes = m.at("sizes").get<std::vector<std::size_t>>();
      set.params.per_size = m.at("per_size").get<std::size_t>();
      set.params.k_induced = m.at("k_induced").get<int>();
      set.params.c = m.at("c").get<double>();
      set.params.master_seed = m.at("master_seed").get<std::uint64_t>();
      set.params.options.balanced_classes = m.value("balanced_classes", false);
      set.params.options.reject_bipartite = m.value("reject_bipartite", false);
      for (const auto& f : m.at("instances")) files.push_back(dir / f.get<std::string>());
    } catch (const json::exception& e) {
      throw ParseError(0, manifest_path.string() + ": " + e.what());
    }
  } else {
    if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() == ".col" && fs::exists(meta_path(entry.path())))
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    set.params.sizes.clear();
  }
  for (const auto& f : files) set.instances.push_back(read_instance(f));
  return set;
}

}  // namespace gcolor
