#include "copgame/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace copgame {

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<Vertex>::max() - 1) throw std::invalid_argument("Graph: too many vertices");
  std::vector<std::size_t> deg(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("Graph: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range for n = " + std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    targets_[fill[u]++] = v;
    targets_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(v) + ", " + std::to_string(*dup) + ")");
    }
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::uint32_t> distances_from(const Graph& g, Vertex source) {
  if (source >= g.vertex_count()) {
    throw std::out_of_range("distances_from: source " + std::to_string(source) + " out of range");
  }
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<std::uint32_t> girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::uint32_t best = kUnreachable;
  std::vector<std::uint32_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.clear();
    dist[s] = 0;
    parent[s] = s;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      // Nothing shorter can close once the BFS layer reaches half the best cycle.
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kUnreachable) return std::nullopt;
  return best;
}

std::vector<std::uint32_t> component_ids(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> comp(n, kUnreachable);
  std::vector<Vertex> stack;
  std::uint32_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != kUnreachable) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] == kUnreachable) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  const auto comp = component_ids(g);
  return std::all_of(comp.begin(), comp.end(), [](std::uint32_t c) { return c == 0; });
}

GraphMetrics metrics(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("metrics: graph has no vertices");
  GraphMetrics m;
  m.min_degree = g.degree(0);
  m.max_degree = g.degree(0);
  for (Vertex v = 1; v < n; ++v) {
    m.min_degree = std::min(m.min_degree, g.degree(v));
    m.max_degree = std::max(m.max_degree, g.degree(v));
  }
  m.girth = girth(g);
  m.alpha = Rational(static_cast<std::int64_t>(g.edge_count()), static_cast<std::int64_t>(n));
  m.component_ids = component_ids(g);
  m.component_count = *std::max_element(m.component_ids.begin(), m.component_ids.end()) + 1;
  m.connected = m.component_count == 1;
  return m;
}

bool check_isometric_path(const Graph& g, std::span<const Vertex> path) {
  if (path.empty()) throw std::invalid_argument("check_isometric_path: empty path");
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= n) throw std::invalid_argument("check_isometric_path: vertex out of range");
    if (seen[path[i]]) {
      throw std::invalid_argument("check_isometric_path: vertex " + std::to_string(path[i]) + " repeated");
    }
    seen[path[i]] = true;
    if (i > 0 && !g.has_edge(path[i - 1], path[i])) {
      throw std::invalid_argument("check_isometric_path: " + std::to_string(path[i - 1]) + " and " +
                                  std::to_string(path[i]) + " are not adjacent");
    }
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto dist = distances_from(g, path[i]);
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      if (dist[path[j]] != j - i) return false;
    }
  }
  return true;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::uint32_t> index(g.vertex_count(), kUnreachable);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<std::uint32_t>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      if (index[w] != kUnreachable && i < index[w]) edges.emplace_back(static_cast<Vertex>(i), index[w]);
    }
  }
  return Graph(vertices.size(), edges);
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const auto comp = component_ids(g);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < comp.size(); ++v) {
    if (comp[v] >= out.size()) out.resize(comp[v] + 1);
    out[comp[v]].push_back(v);
  }
  return out;
}

}  // namespace copgame
