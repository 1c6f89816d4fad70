#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "copgame/rational.hpp"

namespace copgame {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// Immutable simple undirected graph on vertices 0..n-1, stored as CSR adjacency
// with each neighbor list sorted ascending.
//
// The constructor validates its input: self-loops, parallel edges and
// out-of-range endpoints throw std::invalid_argument. Once built, a Graph is
// safe to share across threads.
class Graph {
public:
  Graph() = default;
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, const std::vector<Edge>& edges)
      : Graph(n, std::span<const Edge>(edges.data(), edges.size())) {}

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  // Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

struct GraphMetrics {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::optional<std::uint32_t> girth;  // nullopt: acyclic
  Rational alpha;                      // e / n, exact
  bool connected = false;
  std::vector<std::uint32_t> component_ids;
  std::uint32_t component_count = 0;
};

// BFS hop distances from `source`; kUnreachable for other components.
std::vector<std::uint32_t> distances_from(const Graph& g, Vertex source);

// Length of a shortest cycle, or nullopt for forests.
std::optional<std::uint32_t> girth(const Graph& g);

// Per-vertex component label (labels are assigned in order of smallest vertex).
std::vector<std::uint32_t> component_ids(const Graph& g);
bool is_connected(const Graph& g);

GraphMetrics metrics(const Graph& g);

// True iff `path` is a geodesic between every pair of its vertices: for all
// i < j, dist(path[i], path[j]) == j - i. Throws std::invalid_argument when
// the input is not a simple path of g.
bool check_isometric_path(const Graph& g, std::span<const Vertex> path);

// Subgraph induced on `vertices`, relabeled 0..|vertices|-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Vertex lists of each connected component, ordered by component label.
std::vector<std::vector<Vertex>> components(const Graph& g);

}  // namespace copgame
