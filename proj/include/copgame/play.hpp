#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "copgame/game.hpp"
#include "copgame/graph.hpp"
#include "copgame/rng.hpp"

namespace copgame {

class CopPolicy {
public:
  virtual ~CopPolicy() = default;
  virtual std::size_t cop_count() const = 0;
  virtual std::vector<Vertex> place(const Graph& g, Rng& rng) = 0;
  // New cop positions in any order; some assignment of old to new positions
  // must move every cop at most one edge.
  virtual std::vector<Vertex> move(const Graph& g, std::span<const Vertex> cops, Vertex robber, Rng& rng) = 0;
  virtual std::string name() const = 0;
};

class RobberPolicy {
public:
  virtual ~RobberPolicy() = default;
  virtual Vertex place(const Graph& g, std::span<const Vertex> cops, Rng& rng) = 0;
  virtual Vertex move(const Graph& g, std::span<const Vertex> cops, Vertex robber, Rng& rng) = 0;
  virtual std::string name() const = 0;
};

// Follows an extracted cop strategy from a fixed placement.
class StrategyCops : public CopPolicy {
public:
  StrategyCops(StrategyTable table, std::vector<Vertex> placement);
  std::size_t cop_count() const override { return placement_.size(); }
  std::vector<Vertex> place(const Graph&, Rng&) override { return placement_; }
  std::vector<Vertex> move(const Graph& g, std::span<const Vertex> cops, Vertex robber, Rng& rng) override;
  std::string name() const override { return "strategy"; }

private:
  StrategyTable table_;
  std::vector<Vertex> placement_;
};

// Each cop independently picks a uniform vertex of its closed neighborhood.
class RandomCops : public CopPolicy {
public:
  explicit RandomCops(std::size_t k, std::vector<Vertex> placement = {});
  std::size_t cop_count() const override { return k_; }
  std::vector<Vertex> place(const Graph& g, Rng& rng) override;
  std::vector<Vertex> move(const Graph& g, std::span<const Vertex> cops, Vertex robber, Rng& rng) override;
  std::string name() const override { return "random"; }

private:
  std::size_t k_;
  std::vector<Vertex> placement_;
};

// Each cop steps along a shortest path toward the robber; random placement.
class ChasingCops : public CopPolicy {
public:
  explicit ChasingCops(std::size_t k) : k_(k) {}
  std::size_t cop_count() const override { return k_; }
  std::vector<Vertex> place(const Graph& g, Rng& rng) override;
  std::vector<Vertex> move(const Graph& g, std::span<const Vertex> cops, Vertex robber, Rng& rng) override;
  std::string name() const override { return "chase"; }

private:
  std::size_t k_;
};

// Follows an extracted robber strategy; throws std::logic_error on a position
// the table does not cover.
class StrategyRobber : public RobberPolicy {
public:
  StrategyRobber(StrategyTable table, std::shared_ptr<const SolveResult> result);
  Vertex place(const Graph& g, std::span<const Vertex> cops, Rng& rng) override;
  Vertex move(const Graph& g, std::span<const Vertex> cops, Vertex robber, Rng& rng) override;
  std::string name() const override { return "strategy"; }

private:
  StrategyTable table_;
  std::shared_ptr<const SolveResult> result_;
};

// Plays to maximize the capture time read from the solver's labels (escapes
// forever when the labels allow it). Well defined on every position.
class DelayingRobber : public RobberPolicy {
public:
  explicit DelayingRobber(std::shared_ptr<const SolveResult> result) : result_(std::move(result)) {}
  Vertex place(const Graph& g, std::span<const Vertex> cops, Rng& rng) override;
  Vertex move(const Graph& g, std::span<const Vertex> cops, Vertex robber, Rng& rng) override;
  std::string name() const override { return "delaying"; }

private:
  std::shared_ptr<const SolveResult> result_;
};

// Uniform over the closed neighborhood; placement uniform over vertices.
class RandomRobber : public RobberPolicy {
public:
  Vertex place(const Graph& g, std::span<const Vertex> cops, Rng& rng) override;
  Vertex move(const Graph& g, std::span<const Vertex> cops, Vertex robber, Rng& rng) override;
  std::string name() const override { return "random"; }
};

// The minimum-degree escape rule on graphs of girth >= 5. Throws
// std::runtime_error if it is ever left without an unguarded neighbor.
class Girth5EscapeRobber : public RobberPolicy {
public:
  explicit Girth5EscapeRobber(const Graph& g) : rule_(g) {}
  Vertex place(const Graph& g, std::span<const Vertex> cops, Rng& rng) override;
  Vertex move(const Graph& g, std::span<const Vertex> cops, Vertex robber, Rng& rng) override;
  std::string name() const override { return "girth5-escape"; }
  std::size_t moves_made() const { return moves_; }

private:
  Girth5Escape rule_;
  std::size_t moves_ = 0;
};

enum class Mover : std::uint8_t { Cops, Robber };

struct TraceStep {
  std::size_t step = 0;  // 0 is the placement, then one step per half-move
  Mover mover = Mover::Cops;
  std::vector<Vertex> cops;
  Vertex robber = 0;
};

struct PlayTrace {
  std::vector<TraceStep> steps;  // empty unless recording was requested
  bool captured = false;
  std::size_t capture_step = 0;  // half-move index of the capture
  std::size_t cop_moves = 0;     // cop moves made before the game ended
  std::size_t rounds = 0;
};

// Plays one game: placements, then up to max_rounds rounds of (cop move,
// robber move). Move legality is checked; an illegal policy move throws
// std::logic_error.
PlayTrace simulate_play(const Graph& g, CopPolicy& cops, RobberPolicy& robber, std::size_t max_rounds,
                        std::uint64_t seed, bool record = true);

}  // namespace copgame
