#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "copgame/graph.hpp"

namespace copgame {

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);  // n >= 3
Graph complete_graph(std::size_t n);
Graph grid_graph(std::size_t rows, std::size_t cols);  // vertex r*cols + c
Graph hypercube_graph(std::size_t dim);
Graph petersen_graph();  // Kneser K(5,2)
Graph heawood_graph();   // incidence graph of PG(2,2)
Graph dodecahedron_graph();
Graph random_tree(std::size_t n, std::uint64_t seed);  // uniform labeled tree via Pruefer code

// Maximal planar graph on n >= 3 vertices: random face insertions followed by
// random edge flips.
Graph random_planar_triangulation(std::size_t n, std::uint64_t seed);

// Point-line incidence graph of PG(2, q) for prime q. Points are vertices
// 0..N-1 and lines N..2N-1, N = q^2 + q + 1. Prime powers are rejected.
struct ProjectivePlane {
  Graph graph;
  std::vector<std::string> labels;  // "P(x,y,z)" / "L[a,b,c]" in normalized coordinates
};
ProjectivePlane projective_plane(std::uint32_t q);
Graph gen_projective_incidence(std::uint32_t q);

// G(n, p): every unordered pair {u, v} (u < v, lexicographic order) is an edge
// iff the next uniform draw of Rng(seed) is below p.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

// Dispatch by family name: path, cycle, complete, grid, hypercube, petersen,
// heawood, dodecahedron, tree, triangulation, projective, gnp.
Graph gen_named(std::string_view family, const std::vector<double>& params);

// Parses "family[:p1[:p2...]]" (grid also accepts "grid:3x4") and calls gen_named.
Graph graph_from_spec(std::string_view spec);

bool is_prime(std::uint64_t q);

}  // namespace copgame
