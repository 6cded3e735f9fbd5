#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace gcolor {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  /// Sorts and removes duplicates.
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members);

  static VertexSet range(std::size_t n);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  const std::vector<Vertex>& members() const noexcept { return members_; }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  VertexSet united(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Vertex-to-color map. Colors are dense indices 0..num_colors()-1.
class Coloring {
 public:
  static constexpr int kUncolored = -1;

  Coloring() = default;
  /// Renumbers the labels densely, preserving their order. Negative entries
  /// become kUncolored so partial colorings can still be represented.
  explicit Coloring(std::vector<int> assignment);
  /// One color per class, in class order. Classes must be disjoint.
  static Coloring from_classes(std::size_t n, std::span<const VertexSet> classes);

  std::size_t size() const noexcept { return assignment_.size(); }
  int num_colors() const noexcept { return num_colors_; }
  int operator[](Vertex v) const { return assignment_[v]; }
  const std::vector<int>& assignment() const noexcept { return assignment_; }
  bool is_total() const;
  /// Vertices of each color, in color order.
  std::vector<VertexSet> classes() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> assignment_;
  int num_colors_ = 0;
};

struct Subgraph;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Keeps a canonical edge list (u < v, sorted), sorted adjacency lists, and a
/// dense adjacency bit matrix for constant-time adjacency queries.
class Graph {
 public:
  Graph() = default;
  /// Canonicalizes the pairs: orientation is normalized and duplicates
  /// collapse. Throws std::invalid_argument on a self-loop or an endpoint >= n.
  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_pairs);
  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edge_pairs);

  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> adjacency(Vertex v) const;
  std::size_t degree(Vertex v) const { return adjacency(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Graph on the same vertices with exactly the missing pairs as edges.
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Induced subgraph with the map from its vertex ids back to the parent's.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> parent_ids;

  VertexSet to_parent(const VertexSet& local) const;
};

VertexSet neighbors(const Graph& g, Vertex v);
/// Vertices outside s with no neighbor in s.
VertexSet non_neighborhood(const Graph& g, const VertexSet& s);
Subgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
/// Throws std::invalid_argument when the coloring is not total over g.
bool is_proper_coloring(const Graph& g, const Coloring& coloring);
bool is_bipartite(const Graph& g);

}  // namespace gcolor
