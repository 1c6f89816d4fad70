#include "copgame/play.hpp"

#include <algorithm>
#include <stdexcept>

namespace copgame {

namespace {

bool step_ok(const Graph& g, Vertex from, Vertex to) { return from == to || g.has_edge(from, to); }

// Some bijection from -> to moves every cop at most one edge. k is small, so
// trying the permutations of `to` is enough.
bool legal_joint_move(const Graph& g, std::span<const Vertex> from, std::vector<Vertex> to) {
  if (from.size() != to.size()) return false;
  std::sort(to.begin(), to.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < from.size() && ok; ++i) ok = step_ok(g, from[i], to[i]);
    if (ok) return true;
  } while (std::next_permutation(to.begin(), to.end()));
  return false;
}

Vertex random_closed_neighbor(const Graph& g, Vertex v, Rng& rng) {
  const auto nb = g.neighbors(v);
  const std::size_t pick = rng.below(nb.size() + 1);
  return pick == nb.size() ? v : nb[pick];
}

bool on_cop(std::span<const Vertex> cops, Vertex r) { return std::find(cops.begin(), cops.end(), r) != cops.end(); }

}  // namespace

StrategyCops::StrategyCops(StrategyTable table, std::vector<Vertex> placement)
    : table_(std::move(table)), placement_(std::move(placement)) {
  if (table_.side != Side::Cops) throw std::invalid_argument("StrategyCops: robber table given");
  std::sort(placement_.begin(), placement_.end());
}

std::vector<Vertex> StrategyCops::move(const Graph&, std::span<const Vertex> cops, Vertex robber, Rng&) {
  GameState s{std::vector<Vertex>(cops.begin(), cops.end()), robber, Side::Cops};
  std::sort(s.cops.begin(), s.cops.end());
  const auto next = table_.next(s);
  if (!next) throw std::logic_error("StrategyCops: strategy table has no move for a reached position");
  return next->cops;
}

RandomCops::RandomCops(std::size_t k, std::vector<Vertex> placement) : k_(k), placement_(std::move(placement)) {
  if (!placement_.empty() && placement_.size() != k_) throw std::invalid_argument("RandomCops: placement size != k");
}

std::vector<Vertex> RandomCops::place(const Graph& g, Rng& rng) {
  if (!placement_.empty()) return placement_;
  std::vector<Vertex> out(k_);
  for (auto& c : out) c = static_cast<Vertex>(rng.below(g.vertex_count()));
  return out;
}

std::vector<Vertex> RandomCops::move(const Graph& g, std::span<const Vertex> cops, Vertex, Rng& rng) {
  std::vector<Vertex> out;
  out.reserve(cops.size());
  for (Vertex c : cops) out.push_back(random_closed_neighbor(g, c, rng));
  return out;
}

std::vector<Vertex> ChasingCops::place(const Graph& g, Rng& rng) {
  std::vector<Vertex> out(k_);
  for (auto& c : out) c = static_cast<Vertex>(rng.below(g.vertex_count()));
  return out;
}

std::vector<Vertex> ChasingCops::move(const Graph& g, std::span<const Vertex> cops, Vertex robber, Rng& rng) {
  const auto dist = distances_from(g, robber);
  std::vector<Vertex> out;
  out.reserve(cops.size());
  for (Vertex c : cops) {
    std::vector<Vertex> best{c};
    for (Vertex w : g.neighbors(c)) {
      if (dist[w] < dist[best.front()]) {
        best.assign(1, w);
      } else if (dist[w] == dist[best.front()] && w != best.front()) {
        best.push_back(w);
      }
    }
    out.push_back(best[rng.below(best.size())]);
  }
  return out;
}

StrategyRobber::StrategyRobber(StrategyTable table, std::shared_ptr<const SolveResult> result)
    : table_(std::move(table)), result_(std::move(result)) {
  if (table_.side != Side::Robber) throw std::invalid_argument("StrategyRobber: cop table given");
}

Vertex StrategyRobber::place(const Graph&, std::span<const Vertex> cops, Rng&) {
  std::vector<Vertex> sorted(cops.begin(), cops.end());
  std::sort(sorted.begin(), sorted.end());
  return result_->best_robber_placement(sorted);
}

Vertex StrategyRobber::move(const Graph&, std::span<const Vertex> cops, Vertex robber, Rng&) {
  GameState s{std::vector<Vertex>(cops.begin(), cops.end()), robber, Side::Robber};
  std::sort(s.cops.begin(), s.cops.end());
  const auto next = table_.next(s);
  if (!next) throw std::logic_error("StrategyRobber: strategy table has no move for a reached position");
  return next->robber;
}

Vertex DelayingRobber::place(const Graph&, std::span<const Vertex> cops, Rng&) {
  std::vector<Vertex> sorted(cops.begin(), cops.end());
  std::sort(sorted.begin(), sorted.end());
  return result_->best_robber_placement(sorted);
}

Vertex DelayingRobber::move(const Graph& g, std::span<const Vertex> cops, Vertex robber, Rng&) {
  std::vector<Vertex> sorted(cops.begin(), cops.end());
  std::sort(sorted.begin(), sorted.end());
  const StateSpace& sp = *result_->space;
  const std::uint32_t pid = sp.rank(sorted);
  auto value = [&](Vertex to) { return result_->capture_time[sp.index(pid, to, Side::Cops)]; };
  Vertex best = robber;
  std::uint32_t best_value = value(robber);
  for (Vertex w : g.neighbors(robber)) {
    if (value(w) > best_value) {
      best = w;
      best_value = value(w);
    }
  }
  return best;
}

Vertex RandomRobber::place(const Graph& g, std::span<const Vertex>, Rng& rng) {
  return static_cast<Vertex>(rng.below(g.vertex_count()));
}

Vertex RandomRobber::move(const Graph& g, std::span<const Vertex>, Vertex robber, Rng& rng) {
  return random_closed_neighbor(g, robber, rng);
}

Vertex Girth5EscapeRobber::place(const Graph&, std::span<const Vertex> cops, Rng&) {
  const auto v = rule_.placement(cops);
  if (!v) throw std::runtime_error("Girth5EscapeRobber: every vertex is within distance 1 of a cop");
  return *v;
}

Vertex Girth5EscapeRobber::move(const Graph&, std::span<const Vertex> cops, Vertex robber, Rng&) {
  const auto v = rule_.move(cops, robber);
  if (!v) throw std::runtime_error("Girth5EscapeRobber: no unguarded neighbor of " + std::to_string(robber));
  ++moves_;
  return *v;
}

PlayTrace simulate_play(const Graph& g, CopPolicy& cops, RobberPolicy& robber, std::size_t max_rounds,
                        std::uint64_t seed, bool record) {
  Rng rng(seed);
  PlayTrace trace;
  std::vector<Vertex> cop_pos = cops.place(g, rng);
  if (cop_pos.size() != cops.cop_count()) throw std::logic_error("simulate_play: cop placement has wrong size");
  for (Vertex c : cop_pos) {
    if (c >= g.vertex_count()) throw std::logic_error("simulate_play: cop placed off the graph");
  }
  std::sort(cop_pos.begin(), cop_pos.end());
  Vertex r = robber.place(g, cop_pos, rng);
  if (r >= g.vertex_count()) throw std::logic_error("simulate_play: robber placed off the graph");

  std::size_t step = 0;
  auto log = [&](Mover who) {
    if (record) trace.steps.push_back({step, who, cop_pos, r});
  };
  auto finish_if_caught = [&]() {
    if (!on_cop(cop_pos, r)) return false;
    trace.captured = true;
    trace.capture_step = step;
    return true;
  };

  log(Mover::Robber);
  if (finish_if_caught()) return trace;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    ++step;
    std::vector<Vertex> next = cops.move(g, cop_pos, r, rng);
    if (!legal_joint_move(g, cop_pos, next)) throw std::logic_error("simulate_play: illegal cop move");
    std::sort(next.begin(), next.end());
    cop_pos = std::move(next);
    ++trace.cop_moves;
    log(Mover::Cops);
    if (finish_if_caught()) return trace;

    ++step;
    const Vertex to = robber.move(g, cop_pos, r, rng);
    if (to >= g.vertex_count() || !step_ok(g, r, to)) throw std::logic_error("simulate_play: illegal robber move");
    r = to;
    log(Mover::Robber);
    trace.rounds = round + 1;
    if (finish_if_caught()) return trace;
  }
  return trace;
}

}  // namespace copgame
