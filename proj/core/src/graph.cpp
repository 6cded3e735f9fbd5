#include "gcolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace gcolor {

namespace {

void check_set(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.members().back() >= g.num_vertices()) {
    throw std::out_of_range("vertex " + std::to_string(s.members().back()) +
                            " out of range for graph with " +
                            std::to_string(g.num_vertices()) + " vertices");
  }
}

}  // namespace

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet VertexSet::range(std::size_t n) {
  std::vector<Vertex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
  VertexSet s;
  s.members_ = std::move(all);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::united(const VertexSet& other) const {
  VertexSet out;
  out.members_.reserve(size() + other.size());
  std::set_union(begin(), end(), other.begin(), other.end(),
                 std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(begin(), end(), other.begin(), other.end(),
                      std::back_inserter(out.members_));
  return out;
}

Coloring::Coloring(std::vector<int> assignment) : assignment_(std::move(assignment)) {
  std::vector<int> labels;
  for (int c : assignment_)
    if (c >= 0) labels.push_back(c);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (int& c : assignment_) {
    c = c < 0 ? kUncolored
              : static_cast<int>(std::lower_bound(labels.begin(), labels.end(), c) - labels.begin());
  }
  num_colors_ = static_cast<int>(labels.size());
}

Coloring Coloring::from_classes(std::size_t n, std::span<const VertexSet> classes) {
  std::vector<int> assignment(n, kUncolored);
  int color = 0;
  for (const VertexSet& cls : classes) {
    if (cls.empty()) continue;
    for (Vertex v : cls) {
      if (v >= n) throw std::out_of_range("color class vertex out of range");
      if (assignment[v] != kUncolored) {
        throw std::invalid_argument("color classes overlap at vertex " + std::to_string(v));
      }
      assignment[v] = color;
    }
    ++color;
  }
  return Coloring(std::move(assignment));
}

bool Coloring::is_total() const {
  return std::none_of(assignment_.begin(), assignment_.end(),
                      [](int c) { return c == kUncolored; });
}

std::vector<VertexSet> Coloring::classes() const {
  std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(num_colors_));
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    if (assignment_[v] >= 0) buckets[assignment_[v]].push_back(static_cast<Vertex>(v));
  }
  std::vector<VertexSet> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(std::move(b));
  return out;
}

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_pairs)
    : n_(n), adjacency_(n), words_per_row_((n + 63) / 64), bits_(n * words_per_row_, 0) {
  edges_.reserve(edge_pairs.size());
  for (auto [a, b] : edge_pairs) {
    if (a >= n || b >= n) {
      throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") has an endpoint outside 0.." +
                                  std::to_string(n == 0 ? 0 : n - 1));
    }
    if (a == b) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    }
    edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    bits_[e.u * words_per_row_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
    bits_[e.v * words_per_row_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

Graph::Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edge_pairs)
    : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edge_pairs.begin(), edge_pairs.size())) {}

Graph Graph::complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return Graph(n, pairs);
}

Graph Graph::path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 1; v < n; ++v) pairs.emplace_back(v - 1, v);
  return Graph(n, pairs);
}

Graph Graph::cycle(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 1; v < n; ++v) pairs.emplace_back(v - 1, v);
  if (n >= 3) pairs.emplace_back(static_cast<Vertex>(n - 1), 0);
  return Graph(n, pairs);
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph with " +
                            std::to_string(n_) + " vertices");
  }
}

std::span<const Vertex> Graph::adjacency(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[u * words_per_row_ + v / 64] >> (v % 64)) & 1U;
}

Graph Graph::complement() const {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) pairs.emplace_back(u, v);
  return Graph(n_, pairs);
}

VertexSet Subgraph::to_parent(const VertexSet& local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(parent_ids.at(v));
  return VertexSet(std::move(out));
}

VertexSet neighbors(const Graph& g, Vertex v) {
  auto adj = g.adjacency(v);
  return VertexSet(std::vector<Vertex>(adj.begin(), adj.end()));
}

VertexSet non_neighborhood(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  std::vector<bool> excluded(g.num_vertices(), false);
  for (Vertex v : s) {
    excluded[v] = true;
    for (Vertex w : g.adjacency(v)) excluded[w] = true;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!excluded[v]) out.push_back(v);
  return VertexSet(std::move(out));
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j]))
        pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Subgraph{Graph(s.size(), pairs), s.members()};
}

bool is_independent(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_proper_coloring(const Graph& g, const Coloring& coloring) {
  if (coloring.size() != g.num_vertices() || !coloring.is_total()) {
    throw std::invalid_argument("coloring does not assign a color to every vertex");
  }
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return coloring[e.u] != coloring[e.v];
  });
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.num_vertices(), -1);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.num_vertices(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.adjacency(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace gcolor
