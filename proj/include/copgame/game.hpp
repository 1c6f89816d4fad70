#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "copgame/graph.hpp"

// Exact solver for the k-cops-and-robber game.
//
// Rules: the cops place themselves (several may share a vertex), the robber
// then places himself, and the sides alternate with the cops moving first.
// In a cop turn all k cops move at once, each along one edge or staying put;
// in a robber turn the robber does the same. The robber is caught as soon as
// he shares a vertex with a cop after either side's move.
namespace copgame {

enum class Side : std::uint8_t { Cops = 0, Robber = 1 };

struct GameState {
  std::vector<Vertex> cops;  // sorted ascending
  Vertex robber = 0;
  Side to_move = Side::Cops;

  friend bool operator==(const GameState&, const GameState&) = default;
};

struct SolveLimits {
  std::uint64_t max_states = 50'000'000;
};

class StateLimitExceeded : public std::runtime_error {
public:
  StateLimitExceeded(std::uint64_t estimate, std::uint64_t limit);
  std::uint64_t estimate() const { return estimate_; }
  std::uint64_t limit() const { return limit_; }

private:
  std::uint64_t estimate_;
  std::uint64_t limit_;
};

class DisconnectedGraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// C(n+k-1, k) * n * 2, saturating at UINT64_MAX.
std::uint64_t estimate_state_count(std::size_t n, std::size_t k);

// Dense numbering of game positions. Cop multisets are ranked in colex order
// of their strictly increasing shift (c_i + i), so a position is
// (placement id, robber vertex, side to move).
class StateSpace {
public:
  StateSpace(Graph g, std::size_t k);

  const Graph& graph() const { return graph_; }
  std::size_t cops() const { return k_; }
  std::size_t vertex_count() const { return n_; }
  std::uint32_t placement_count() const { return placements_; }
  std::uint64_t state_count() const { return std::uint64_t{placements_} * n_ * 2; }

  std::span<const Vertex> placement(std::uint32_t id) const {
    return {table_.data() + std::size_t{id} * k_, k_};
  }
  // `cops` must be sorted.
  std::uint32_t rank(std::span<const Vertex> cops) const;

  std::uint64_t index(std::uint32_t placement_id, Vertex robber, Side side) const {
    return (std::uint64_t{placement_id} * n_ + robber) * 2 + static_cast<std::uint64_t>(side);
  }
  std::uint64_t index(const GameState& s) const;
  GameState state(std::uint64_t index) const;

  // Sorted, duplicate-free ids reachable by one joint cop move (staying allowed).
  void joint_moves(std::uint32_t placement_id, std::vector<std::uint32_t>& out) const;

  bool captured(std::uint32_t placement_id, Vertex robber) const;

private:
  Graph graph_;
  std::size_t n_;
  std::size_t k_;
  std::uint32_t placements_ = 0;
  std::vector<std::vector<std::uint64_t>> binom_;  // binom_[m][j] = C(m, j)
  std::vector<Vertex> table_;
};

inline constexpr std::uint32_t kNotCaptured = kUnreachable;

struct SolveResult {
  std::shared_ptr<const StateSpace> space;
  std::size_t k = 0;
  bool cop_win = false;
  // Indexed by StateSpace::index: number of cop moves until capture under
  // optimal play, kNotCaptured if the robber escapes forever.
  std::vector<std::uint32_t> capture_time;
  // Placement minimizing the worst-case capture time (when cop_win).
  std::optional<std::vector<Vertex>> winning_initial_placement;
  // Game value from that placement against the best robber placement.
  std::optional<std::uint32_t> capture_time_max;
  std::uint64_t state_count = 0;
  std::uint32_t levels = 0;  // fixpoint rounds until stable

  std::uint32_t time_of(const GameState& s) const { return capture_time[space->index(s)]; }
  // Robber placement maximizing the capture time against `cops`
  // (kNotCaptured beats everything; ties go to the smaller vertex).
  Vertex best_robber_placement(std::span<const Vertex> cops) const;
};

// Exact decision of whether k cops win on the connected graph g.
// Throws StateLimitExceeded before allocating when the state count would
// exceed limits.max_states, DisconnectedGraphError for disconnected input.
SolveResult solve(const Graph& g, std::size_t k, const SolveLimits& limits = {});

struct ComponentCopNumber {
  std::vector<Vertex> vertices;
  std::size_t cop_number = 0;
  SolveResult winning_solve;
};

struct CopNumberResult {
  std::size_t cop_number = 0;  // sum over components
  std::vector<ComponentCopNumber> components;
};

// Least k such that k cops win, summed over connected components.
CopNumberResult cop_number_detail(const Graph& g, const SolveLimits& limits = {});
std::size_t cop_number(const Graph& g, const SolveLimits& limits = {});

// Corner-removal characterization of cop-win graphs; g must be connected.
bool is_copwin_dismantlable(const Graph& g);

inline constexpr std::uint32_t kNoMove = kUnreachable;

// Positional strategy for one side. For Cops, move_of holds the successor
// placement id; for Robber, the successor vertex. Indexed by
// placement_id * n + robber; kNoMove where the strategy is undefined.
struct StrategyTable {
  Side side = Side::Cops;
  std::shared_ptr<const StateSpace> space;
  std::vector<std::uint32_t> move_of;

  bool defined(std::span<const Vertex> cops, Vertex robber) const;
  // Position after the move, or nullopt when undefined.
  std::optional<GameState> next(const GameState& s) const;
};

// Cops: defined on every cop-winning, not yet captured cop-to-move position,
// always stepping to a position whose capture time is one lower.
// Robber: defined on every robber-to-move position the cops cannot win,
// always stepping to a position the cops still cannot win.
// Throws std::invalid_argument when the requested side lost.
StrategyTable extract_strategy(const SolveResult& result, Side side);

// Neighbor of `robber` that no cop guards (a cop guards u when it stands on u
// or next to u), or nullopt if all are guarded. Smallest such vertex wins.
// Throws std::invalid_argument when girth(g) < 5.
std::optional<Vertex> girth5_escape_move(const Graph& g, std::span<const Vertex> cops, Vertex robber);

// Same rule with the girth precondition checked once up front.
class Girth5Escape {
public:
  explicit Girth5Escape(const Graph& g);
  std::optional<Vertex> move(std::span<const Vertex> cops, Vertex robber) const;
  // A vertex with no cop within distance 1, if one exists.
  std::optional<Vertex> placement(std::span<const Vertex> cops) const;
  const Graph& graph() const { return graph_; }

private:
  Graph graph_;
};

}  // namespace copgame
