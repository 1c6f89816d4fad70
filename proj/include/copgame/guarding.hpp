#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "copgame/graph.hpp"
#include "copgame/play.hpp"

// One cop guarding an isometric path I = (a = I[0], ..., b = I[L]).
//
// The shadow of a vertex s is I[min(dist(s, a), L)]. The cop walks to a along
// a shortest path, then advances along I toward b until it stands on the
// robber's shadow; from then on it moves to the shadow after every robber
// move. Because dist(., a) changes by at most one along an edge, the shadow
// moves by at most one position along I, so the cop keeps up; and because I
// is isometric, a robber standing on I is his own shadow and gets caught.
namespace copgame {

class GuardedPath {
public:
  // Throws std::invalid_argument if `path` is not an isometric path of g.
  GuardedPath(Graph g, std::vector<Vertex> path);

  const Graph& graph() const { return graph_; }
  std::span<const Vertex> path() const { return path_; }
  Vertex a() const { return path_.front(); }
  Vertex b() const { return path_.back(); }
  std::size_t length() const { return path_.size() - 1; }
  const std::vector<std::uint32_t>& dist_a() const { return dist_a_; }

  std::size_t shadow_index(Vertex s) const;
  Vertex shadow(Vertex s) const { return path_[shadow_index(s)]; }
  // Position of v on I, if any.
  std::optional<std::size_t> index_on_path(Vertex v) const;

private:
  Graph graph_;
  std::vector<Vertex> path_;
  std::vector<std::uint32_t> dist_a_;
  std::vector<std::uint32_t> position_;  // kUnreachable off the path
};

enum class GuardPhase : std::uint8_t { Approach, Advance, Settled };

struct GuardDecision {
  Vertex cop = 0;
  GuardPhase phase = GuardPhase::Approach;
  // The cop was already on the robber's shadow at the start of the turn.
  bool settled_before_move = false;
  bool settled_after_move = false;
};

// The guard's move from `cop` in `phase` when the robber stands on `robber`.
GuardDecision guard_decide(const GuardedPath& path, Vertex cop, GuardPhase phase, Vertex robber);

struct GuardState {
  std::shared_ptr<const GuardedPath> path;
  Vertex cop_pos = 0;
  GuardPhase phase = GuardPhase::Approach;
  std::size_t turns = 0;                    // cop turns taken
  std::optional<std::size_t> settle_turns;  // cop turns taken when first on the shadow

  bool settled() const { return phase == GuardPhase::Settled; }
};

// Throws std::invalid_argument when a is unreachable from cop_start.
GuardState make_guard(std::shared_ptr<const GuardedPath> path, Vertex cop_start);

Vertex shadow(const GuardState& gs, Vertex s);
// Plays one cop turn against the robber at `robber`; returns the new cop position.
Vertex guard_step(GuardState& gs, Vertex robber);

enum class GuardRobberPolicy { Random, GreedyAway, Adversarial };
std::string_view to_string(GuardRobberPolicy p);
GuardRobberPolicy parse_guard_policy(std::string_view name);

// Picks the robber's next vertex against a guard.
Vertex guard_robber_move(GuardRobberPolicy policy, const GuardState& gs, Vertex robber, Rng& rng);

struct GuardVerdict {
  bool isometric = true;
  bool ok = false;  // no violation of any kind
  std::string policy;
  std::size_t trials = 0;
  std::size_t violations = 0;          // robber on I at a settled cop's turn and not caught
  std::size_t shadow_violations = 0;   // settled cop off the robber's shadow
  std::size_t settle_violations = 0;   // settled later than dist(start, a) + L turns
  std::size_t max_settle_turns = 0;
  std::size_t captures = 0;
  std::size_t entries = 0;  // robber stepped onto I while the cop was settled
};

struct VerifyGuardOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t extra_rounds = 32;  // rounds beyond dist(start, a) + L per trial
  std::vector<PlayTrace>* traces = nullptr;  // receives one trace per trial when set
};

// Seeded trials: random cop start in a's component, random robber start
// elsewhere in the graph, robber driven by `policy`. Throws
// std::invalid_argument for a non-isometric path.
GuardVerdict verify_guard(const Graph& g, std::span<const Vertex> path, GuardRobberPolicy policy,
                          const VerifyGuardOptions& options = {});

struct ExhaustiveGuardResult {
  std::size_t states = 0;
  std::size_t violations = 0;
  std::size_t shadow_violations = 0;
  std::size_t settle_violations = 0;
  bool ok() const { return violations == 0 && shadow_violations == 0 && settle_violations == 0; }
};

// Every robber trajectory of at most max_robber_moves moves, from every cop
// start in a's component and every robber start, against the guard. The cop
// is deterministic, so positions reached after the same number of turns are
// merged.
ExhaustiveGuardResult exhaustive_guard_check(const GuardedPath& path, std::size_t max_robber_moves);

// All isometric paths of g with both orientations (a single vertex counts once).
std::vector<std::vector<Vertex>> isometric_paths(const Graph& g);

}  // namespace copgame
