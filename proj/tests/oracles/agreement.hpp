#pragma once

// Position-by-position comparison of the solver against the minimax oracle.

#include <string>

#include "copgame/game.hpp"
#include "oracles/minimax.hpp"

namespace oracle {

struct Agreement {
  bool verdict = true;     // cop_win matches
  bool value = true;       // min-max capture time matches
  std::size_t mismatched_states = 0;
  bool ok() const { return verdict && value && mismatched_states == 0; }
};

inline Agreement compare_with_oracle(const copgame::Graph& g, std::size_t k) {
  const auto res = copgame::solve(g, k);
  const Minimax mm(g, k);
  Agreement a;
  a.verdict = res.cop_win == mm.cop_win();
  a.value = (res.capture_time_max.has_value() == mm.value().has_value()) &&
            (!mm.value() || *res.capture_time_max == *mm.value());
  const auto& sp = *res.space;
  for (std::uint32_t pid = 0; pid < sp.placement_count(); ++pid) {
    const auto cops = sp.placement(pid);
    for (copgame::Vertex r = 0; r < g.vertex_count(); ++r) {
      if (res.capture_time[sp.index(pid, r, copgame::Side::Cops)] != mm.cop_time(cops, r)) ++a.mismatched_states;
      if (res.capture_time[sp.index(pid, r, copgame::Side::Robber)] != mm.robber_time(cops, r)) ++a.mismatched_states;
    }
  }
  return a;
}

}  // namespace oracle
