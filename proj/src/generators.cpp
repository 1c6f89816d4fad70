#include "copgame/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

#include "copgame/rng.hpp"

namespace copgame {

namespace {

std::size_t as_count(double x, std::string_view what) {
  if (!(x >= 0) || x != std::floor(x) || x > 1e9) {
    throw std::invalid_argument(std::string(what) + ": expected a non-negative integer parameter");
  }
  return static_cast<std::size_t>(x);
}

void require_params(std::string_view family, const std::vector<double>& params, std::size_t lo, std::size_t hi) {
  if (params.size() < lo || params.size() > hi) {
    throw std::invalid_argument("gen_named: wrong number of parameters for family '" + std::string(family) + "'");
  }
}

}  // namespace

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

Graph path_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path_graph: n must be >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("complete_graph: n must be >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("grid_graph: dimensions must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = static_cast<Vertex>(r * cols + c);
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, static_cast<Vertex>(v + cols));
    }
  }
  return Graph(rows * cols, edges);
}

Graph hypercube_graph(std::size_t dim) {
  if (dim > 20) throw std::invalid_argument("hypercube_graph: dimension too large");
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t b = 0; b < dim; ++b) {
      const Vertex v = u ^ (Vertex{1} << b);
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph petersen_graph() {
  std::vector<std::array<int, 2>> pairs;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) pairs.push_back({i, j});
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < pairs.size(); ++u) {
    for (Vertex v = u + 1; v < pairs.size(); ++v) {
      const auto& a = pairs[u];
      const auto& b = pairs[v];
      if (a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1]) edges.emplace_back(u, v);
    }
  }
  return Graph(pairs.size(), edges);
}

Graph heawood_graph() { return gen_projective_incidence(2); }

Graph dodecahedron_graph() {
  // Generalized Petersen graph GP(10, 2): outer 10-cycle, spokes, inner step-2 cycle.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 10; ++i) {
    edges.emplace_back(i, (i + 1) % 10);
    edges.emplace_back(i, i + 10);
    edges.emplace_back(i + 10, 10 + (i + 2) % 10);
  }
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  return Graph(20, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_tree: n must be >= 1");
  if (n == 1) return Graph(1, std::vector<Edge>{});
  if (n == 2) return Graph(2, std::vector<Edge>{{0, 1}});
  Rng rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));
  std::vector<std::size_t> deg(n, 1);
  for (Vertex c : code) ++deg[c];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 1) leaves.insert(v);
  }
  std::vector<Edge> edges;
  for (Vertex c : code) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    if (--deg[c] == 1) leaves.insert(c);
  }
  const Vertex a = *leaves.begin();
  const Vertex b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph random_planar_triangulation(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random_planar_triangulation: n must be >= 3");
  Rng rng(seed);
  using Face = std::array<Vertex, 3>;
  // Both sides of the initial triangle are faces.
  std::vector<Face> faces{{0, 1, 2}, {0, 2, 1}};
  std::set<Edge> edge_set{{0, 1}, {0, 2}, {1, 2}};
  auto key = [](Vertex a, Vertex b) { return Edge{std::min(a, b), std::max(a, b)}; };

  for (Vertex v = 3; v < n; ++v) {
    const std::size_t fi = rng.below(faces.size());
    const Face f = faces[fi];
    faces[fi] = {f[0], f[1], v};
    faces.push_back({f[1], f[2], v});
    faces.push_back({f[2], f[0], v});
    for (Vertex w : f) edge_set.insert(key(w, v));
  }

  std::vector<std::size_t> deg(n, 0);
  for (const auto& [a, b] : edge_set) {
    ++deg[a];
    ++deg[b];
  }
  // Flip edge (a,b) shared by faces (a,b,x) and (b,a,y) into (x,y).
  const std::size_t flips = 4 * n;
  for (std::size_t t = 0; t < flips && n >= 4; ++t) {
    const std::size_t fi = rng.below(faces.size());
    const std::size_t side = rng.below(3);
    const Vertex a = faces[fi][side];
    const Vertex b = faces[fi][(side + 1) % 3];
    const Vertex x = faces[fi][(side + 2) % 3];
    std::size_t fj = faces.size();
    std::size_t jpos = 0;
    for (std::size_t j = 0; j < faces.size() && fj == faces.size(); ++j) {
      for (std::size_t s = 0; s < 3; ++s) {
        if (faces[j][s] == b && faces[j][(s + 1) % 3] == a) {
          fj = j;
          jpos = s;
          break;
        }
      }
    }
    if (fj == faces.size()) continue;
    const Vertex y = faces[fj][(jpos + 2) % 3];
    if (x == y || edge_set.count(key(x, y)) || deg[a] <= 3 || deg[b] <= 3) continue;
    edge_set.erase(key(a, b));
    edge_set.insert(key(x, y));
    --deg[a];
    --deg[b];
    ++deg[x];
    ++deg[y];
    faces[fi] = {x, a, y};
    faces[fj] = {y, b, x};
  }
  return Graph(n, std::vector<Edge>(edge_set.begin(), edge_set.end()));
}

ProjectivePlane projective_plane(std::uint32_t q) {
  if (!is_prime(q)) {
    throw std::invalid_argument("projective_plane: q = " + std::to_string(q) +
                                " is not prime (prime-power orders are not supported)");
  }
  if (q > 1000) throw std::invalid_argument("projective_plane: q too large");
  // Normalized representatives: first nonzero coordinate equal to 1.
  std::vector<std::array<std::uint32_t, 3>> reps;
  for (std::uint32_t y = 0; y < q; ++y) {
    for (std::uint32_t z = 0; z < q; ++z) reps.push_back({1, y, z});
  }
  for (std::uint32_t z = 0; z < q; ++z) reps.push_back({0, 1, z});
  reps.push_back({0, 0, 1});

  const auto count = static_cast<Vertex>(reps.size());
  std::vector<Edge> edges;
  for (Vertex p = 0; p < count; ++p) {
    for (Vertex l = 0; l < count; ++l) {
      const std::uint64_t dot = std::uint64_t{reps[p][0]} * reps[l][0] + std::uint64_t{reps[p][1]} * reps[l][1] +
                                std::uint64_t{reps[p][2]} * reps[l][2];
      if (dot % q == 0) edges.emplace_back(p, count + l);
    }
  }
  ProjectivePlane plane{Graph(2 * count, edges), {}};
  auto fmt = [](const std::array<std::uint32_t, 3>& r) {
    return std::to_string(r[0]) + "," + std::to_string(r[1]) + "," + std::to_string(r[2]);
  };
  for (const auto& r : reps) plane.labels.push_back("P(" + fmt(r) + ")");
  for (const auto& r : reps) plane.labels.push_back("L[" + fmt(r) + "]");
  return plane;
}

Graph gen_projective_incidence(std::uint32_t q) { return projective_plane(q).graph; }

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_gnp: p must lie in [0, 1]");
  if (n == 0) throw std::invalid_argument("gen_gnp: n must be >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph gen_named(std::string_view family, const std::vector<double>& params) {
  auto seed_of = [](double x) { return static_cast<std::uint64_t>(as_count(x, "seed")); };
  if (family == "path") {
    require_params(family, params, 1, 1);
    return path_graph(as_count(params[0], "path"));
  }
  if (family == "cycle") {
    require_params(family, params, 1, 1);
    return cycle_graph(as_count(params[0], "cycle"));
  }
  if (family == "complete") {
    require_params(family, params, 1, 1);
    return complete_graph(as_count(params[0], "complete"));
  }
  if (family == "grid") {
    require_params(family, params, 2, 2);
    return grid_graph(as_count(params[0], "grid"), as_count(params[1], "grid"));
  }
  if (family == "hypercube") {
    require_params(family, params, 1, 1);
    return hypercube_graph(as_count(params[0], "hypercube"));
  }
  if (family == "petersen") {
    require_params(family, params, 0, 0);
    return petersen_graph();
  }
  if (family == "heawood") {
    require_params(family, params, 0, 0);
    return heawood_graph();
  }
  if (family == "dodecahedron") {
    require_params(family, params, 0, 0);
    return dodecahedron_graph();
  }
  if (family == "tree") {
    require_params(family, params, 1, 2);
    return random_tree(as_count(params[0], "tree"), params.size() > 1 ? seed_of(params[1]) : 0);
  }
  if (family == "triangulation") {
    require_params(family, params, 1, 2);
    return random_planar_triangulation(as_count(params[0], "triangulation"),
                                       params.size() > 1 ? seed_of(params[1]) : 0);
  }
  if (family == "projective") {
    require_params(family, params, 1, 1);
    return gen_projective_incidence(static_cast<std::uint32_t>(as_count(params[0], "projective")));
  }
  if (family == "gnp") {
    require_params(family, params, 2, 3);
    return gen_gnp(as_count(params[0], "gnp"), params[1], params.size() > 2 ? seed_of(params[2]) : 0);
  }
  throw std::invalid_argument("gen_named: unknown family '" + std::string(family) + "'");
}

Graph graph_from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view family = spec.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string_view::npos) {
    std::string rest(spec.substr(colon + 1));
    if (family == "grid") std::replace(rest.begin(), rest.end(), 'x', ':');
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto next = rest.find(':', start);
      const std::string token = rest.substr(start, next == std::string::npos ? std::string::npos : next - start);
      std::size_t used = 0;
      double value = 0;
      try {
        value = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (token.empty() || used != token.size()) {
        throw std::invalid_argument("graph spec '" + std::string(spec) + "': bad parameter '" + token + "'");
      }
      params.push_back(value);
      if (next == std::string::npos) break;
      start = next + 1;
    }
  }
  return gen_named(family, params);
}

}  // namespace copgame
