#pragma once

// Girth by enumerating simple cycles with iterative deepening on length.

#include <optional>
#include <vector>

#include "copgame/graph.hpp"

namespace oracle {

inline bool has_cycle_of_length(const copgame::Graph& g, std::size_t len) {
  const std::size_t n = g.vertex_count();
  std::vector<char> used(n, 0);
  // Cycles are rooted at their smallest vertex.
  auto dfs = [&](auto&& self, copgame::Vertex root, copgame::Vertex v, std::size_t depth) -> bool {
    for (copgame::Vertex w : g.neighbors(v)) {
      if (w == root && depth == len) return true;
      if (w <= root || used[w] || depth == len) continue;
      used[w] = 1;
      const bool hit = self(self, root, w, depth + 1);
      used[w] = 0;
      if (hit) return true;
    }
    return false;
  };
  for (copgame::Vertex s = 0; s < n; ++s) {
    used.assign(n, 0);
    used[s] = 1;
    if (dfs(dfs, s, s, 1)) return true;
  }
  return false;
}

inline std::optional<std::uint32_t> girth_by_cycles(const copgame::Graph& g) {
  for (std::size_t len = 3; len <= g.vertex_count(); ++len) {
    if (has_cycle_of_length(g, len)) return static_cast<std::uint32_t>(len);
  }
  return std::nullopt;
}

}  // namespace oracle
