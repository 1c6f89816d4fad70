#include "copgame/guarding.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace copgame {

namespace {

constexpr double kViolationScore = 1e9;
constexpr double kCaptureScore = -1e6;

std::vector<std::uint32_t> distances_to_set(const Graph& g, std::span<const Vertex> set) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex v : set) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool closed_step(const Graph& g, Vertex from, Vertex to) { return from == to || g.has_edge(from, to); }

template <typename Pick>
Vertex pick_best(const Graph& g, Vertex robber, Rng& rng, Pick score) {
  std::vector<Vertex> best;
  double best_score = 0;
  auto consider = [&](Vertex w) {
    const double s = score(w);
    if (best.empty() || s > best_score) {
      best.assign(1, w);
      best_score = s;
    } else if (s == best_score) {
      best.push_back(w);
    }
  };
  consider(robber);
  for (Vertex w : g.neighbors(robber)) consider(w);
  return best[rng.below(best.size())];
}

// Outcome of one cop turn for the checks shared by the simulators.
struct TurnCheck {
  bool entry_violation = false;
  bool shadow_violation = false;
  bool illegal = false;
};

TurnCheck check_turn(const GuardedPath& p, Vertex cop_before, GuardPhase phase_before, Vertex robber,
                     const GuardDecision& d) {
  TurnCheck c;
  c.illegal = !closed_step(p.graph(), cop_before, d.cop);
  if (phase_before == GuardPhase::Settled && p.index_on_path(robber) && d.cop != robber) c.entry_violation = true;
  if (d.phase == GuardPhase::Settled && d.cop != p.shadow(robber)) c.shadow_violation = true;
  return c;
}

// Minimax over robber move / guard reply pairs; higher is better for the robber.
double adversary_value(const GuardedPath& p, const std::vector<std::uint32_t>& dist_to_path, Vertex cop,
                       GuardPhase phase, Vertex robber, int robber_moves_left, int depth) {
  const double leaf = -static_cast<double>(dist_to_path[robber] == kUnreachable ? p.graph().vertex_count()
                                                                                : dist_to_path[robber]);
  if (robber_moves_left == 0) return leaf;
  double best = kCaptureScore;
  auto consider = [&](Vertex to) {
    if (to == cop) {
      best = std::max(best, kCaptureScore + depth);
      return;
    }
    const GuardDecision d = guard_decide(p, cop, phase, to);
    const TurnCheck c = check_turn(p, cop, phase, to, d);
    if (c.entry_violation || c.shadow_violation || c.illegal) {
      best = kViolationScore;
      return;
    }
    if (d.cop == to) {
      best = std::max(best, kCaptureScore + depth + 1);
      return;
    }
    best = std::max(best, adversary_value(p, dist_to_path, d.cop, d.phase, to, robber_moves_left - 1, depth + 2));
  };
  consider(robber);
  for (Vertex w : p.graph().neighbors(robber)) {
    if (best == kViolationScore) break;
    consider(w);
  }
  return best;
}

}  // namespace

GuardedPath::GuardedPath(Graph g, std::vector<Vertex> path) : graph_(std::move(g)), path_(std::move(path)) {
  if (!check_isometric_path(graph_, path_)) throw std::invalid_argument("GuardedPath: path is not isometric");
  dist_a_ = distances_from(graph_, path_.front());
  position_.assign(graph_.vertex_count(), kUnreachable);
  for (std::size_t i = 0; i < path_.size(); ++i) position_[path_[i]] = static_cast<std::uint32_t>(i);
}

std::size_t GuardedPath::shadow_index(Vertex s) const {
  if (s >= graph_.vertex_count()) throw std::out_of_range("shadow: vertex out of range");
  // Unreachable vertices are at infinite distance, hence beyond L.
  return std::min<std::size_t>(dist_a_[s], length());
}

std::optional<std::size_t> GuardedPath::index_on_path(Vertex v) const {
  if (v >= position_.size() || position_[v] == kUnreachable) return std::nullopt;
  return position_[v];
}

GuardDecision guard_decide(const GuardedPath& p, Vertex cop, GuardPhase phase, Vertex robber) {
  GuardDecision d;
  if (phase == GuardPhase::Approach && cop != p.a()) {
    const auto& dist = p.dist_a();
    Vertex next = cop;
    for (Vertex w : p.graph().neighbors(cop)) {
      if (dist[w] + 1 == dist[cop]) {
        next = w;
        break;
      }
    }
    d.cop = next;
    d.phase = next == p.a() ? GuardPhase::Advance : GuardPhase::Approach;
    return d;
  }

  const auto at = p.index_on_path(cop);
  if (!at) throw std::logic_error("guard_decide: cop left the path after reaching it");
  const std::size_t c = *at;
  const std::size_t s = p.shadow_index(robber);
  const auto path = p.path();
  if (phase == GuardPhase::Settled) {
    // The shadow moves at most one position per robber move; never jump.
    d.cop = s > c ? path[c + 1] : s < c ? path[c - 1] : path[c];
    d.phase = GuardPhase::Settled;
    return d;
  }
  d.phase = GuardPhase::Settled;
  if (c == s) {
    d.cop = cop;
    d.settled_before_move = true;
  } else if (c + 1 == s || s + 1 == c) {
    d.cop = path[s];
    d.settled_after_move = true;
  } else {
    d.cop = s > c ? path[c + 1] : path[c - 1];
    d.phase = GuardPhase::Advance;
  }
  return d;
}

GuardState make_guard(std::shared_ptr<const GuardedPath> path, Vertex cop_start) {
  if (!path) throw std::invalid_argument("make_guard: null path");
  if (cop_start >= path->graph().vertex_count()) throw std::invalid_argument("make_guard: cop start out of range");
  if (path->dist_a()[cop_start] == kUnreachable) {
    throw std::invalid_argument("make_guard: path endpoint a is unreachable from the cop start");
  }
  GuardState gs;
  gs.cop_pos = cop_start;
  gs.phase = cop_start == path->a() ? GuardPhase::Advance : GuardPhase::Approach;
  gs.path = std::move(path);
  return gs;
}

Vertex shadow(const GuardState& gs, Vertex s) { return gs.path->shadow(s); }

Vertex guard_step(GuardState& gs, Vertex robber) {
  const GuardDecision d = guard_decide(*gs.path, gs.cop_pos, gs.phase, robber);
  if (d.settled_before_move) gs.settle_turns = gs.turns;
  ++gs.turns;
  if (d.settled_after_move) gs.settle_turns = gs.turns;
  gs.cop_pos = d.cop;
  gs.phase = d.phase;
  return gs.cop_pos;
}

std::string_view to_string(GuardRobberPolicy p) {
  switch (p) {
    case GuardRobberPolicy::Random:
      return "random";
    case GuardRobberPolicy::GreedyAway:
      return "greedy";
    case GuardRobberPolicy::Adversarial:
      return "adversarial";
  }
  return "unknown";
}

GuardRobberPolicy parse_guard_policy(std::string_view name) {
  if (name == "random") return GuardRobberPolicy::Random;
  if (name == "greedy") return GuardRobberPolicy::GreedyAway;
  if (name == "adversarial") return GuardRobberPolicy::Adversarial;
  throw std::invalid_argument("unknown guard robber policy '" + std::string(name) +
                              "' (expected random, greedy or adversarial)");
}

Vertex guard_robber_move(GuardRobberPolicy policy, const GuardState& gs, Vertex robber, Rng& rng) {
  const GuardedPath& p = *gs.path;
  const Graph& g = p.graph();
  switch (policy) {
    case GuardRobberPolicy::Random: {
      const auto nb = g.neighbors(robber);
      const std::size_t pick = rng.below(nb.size() + 1);
      return pick == nb.size() ? robber : nb[pick];
    }
    case GuardRobberPolicy::GreedyAway: {
      const auto dist = distances_from(g, gs.cop_pos);
      return pick_best(g, robber, rng, [&](Vertex w) {
        return dist[w] == kUnreachable ? static_cast<double>(g.vertex_count()) : static_cast<double>(dist[w]);
      });
    }
    case GuardRobberPolicy::Adversarial: {
      const auto to_path = distances_to_set(g, p.path());
      return pick_best(g, robber, rng, [&](Vertex w) {
        if (w == gs.cop_pos) return kCaptureScore;
        const GuardDecision d = guard_decide(p, gs.cop_pos, gs.phase, w);
        const TurnCheck c = check_turn(p, gs.cop_pos, gs.phase, w, d);
        if (c.entry_violation || c.shadow_violation || c.illegal) return kViolationScore;
        if (d.cop == w) return kCaptureScore + 1;
        return adversary_value(p, to_path, d.cop, d.phase, w, 1, 2);
      });
    }
  }
  throw std::logic_error("guard_robber_move: unknown policy");
}

GuardVerdict verify_guard(const Graph& g, std::span<const Vertex> path, GuardRobberPolicy policy,
                          const VerifyGuardOptions& options) {
  auto guarded = std::make_shared<const GuardedPath>(g, std::vector<Vertex>(path.begin(), path.end()));
  const GuardedPath& p = *guarded;
  const std::size_t n = g.vertex_count();

  std::vector<Vertex> reach_a;
  for (Vertex v = 0; v < n; ++v) {
    if (p.dist_a()[v] != kUnreachable) reach_a.push_back(v);
  }

  GuardVerdict verdict;
  verdict.policy = std::string(to_string(policy));
  verdict.trials = options.trials;
  const Rng base(options.seed);
  if (options.traces) options.traces->clear();

  for (std::size_t t = 0; t < options.trials; ++t) {
    Rng rng = base.split(t);
    const Vertex cop_start = reach_a[rng.below(reach_a.size())];
    Vertex robber = cop_start;
    if (n > 1) {
      robber = static_cast<Vertex>(rng.below(n - 1));
      if (robber >= cop_start) ++robber;
    }
    GuardState gs = make_guard(guarded, cop_start);
    const std::size_t bound = p.dist_a()[cop_start] + p.length();
    const std::size_t max_rounds = bound + options.extra_rounds;

    PlayTrace trace;
    std::size_t step = 0;
    auto log = [&](Mover who) {
      if (options.traces) trace.steps.push_back({step, who, {gs.cop_pos}, robber});
    };
    auto capture = [&]() {
      trace.captured = true;
      trace.capture_step = step;
      ++verdict.captures;
    };

    log(Mover::Robber);
    if (robber == gs.cop_pos) capture();
    for (std::size_t round = 0; round < max_rounds && !trace.captured; ++round) {
      ++step;
      const Vertex before = gs.cop_pos;
      const GuardPhase phase_before = gs.phase;
      guard_step(gs, robber);
      ++trace.cop_moves;
      GuardDecision d;
      d.cop = gs.cop_pos;
      d.phase = gs.phase;
      const TurnCheck c = check_turn(p, before, phase_before, robber, d);
      if (c.illegal) throw std::logic_error("verify_guard: guard moved more than one edge");
      if (c.entry_violation) ++verdict.violations;
      if (c.shadow_violation) ++verdict.shadow_violations;
      log(Mover::Cops);
      if (gs.cop_pos == robber) {
        capture();
        break;
      }

      ++step;
      const Vertex to = guard_robber_move(policy, gs, robber, rng);
      if (!closed_step(g, robber, to)) throw std::logic_error("verify_guard: illegal robber move");
      robber = to;
      trace.rounds = round + 1;
      log(Mover::Robber);
      if (gs.settled() && p.index_on_path(robber)) ++verdict.entries;
      if (robber == gs.cop_pos) capture();
    }

    if (gs.settle_turns) {
      verdict.max_settle_turns = std::max(verdict.max_settle_turns, *gs.settle_turns);
      if (*gs.settle_turns > bound) ++verdict.settle_violations;
    } else if (gs.turns > bound) {
      ++verdict.settle_violations;
    }
    if (options.traces) options.traces->push_back(std::move(trace));
  }
  verdict.ok = verdict.violations == 0 && verdict.shadow_violations == 0 && verdict.settle_violations == 0;
  return verdict;
}

ExhaustiveGuardResult exhaustive_guard_check(const GuardedPath& p, std::size_t max_robber_moves) {
  const Graph& g = p.graph();
  const std::size_t n = g.vertex_count();
  const auto& dist_a = p.dist_a();
  std::uint32_t max_d = 0;
  for (auto d : dist_a) {
    if (d != kUnreachable) max_d = std::max(max_d, d);
  }
  const std::size_t L = p.length();

  struct Node {
    Vertex cop;
    GuardPhase phase;
    Vertex robber;
    std::uint32_t d;  // distance from the cop's start to a
  };
  auto key = [&](const Node& s) {
    return ((static_cast<std::size_t>(s.d) * 3 + static_cast<std::size_t>(s.phase)) * n + s.cop) * n + s.robber;
  };
  const std::size_t key_count = static_cast<std::size_t>(max_d + 1) * 3 * n * n;

  std::vector<Node> layer;
  for (Vertex c = 0; c < n; ++c) {
    if (dist_a[c] == kUnreachable) continue;
    const GuardPhase phase = c == p.a() ? GuardPhase::Advance : GuardPhase::Approach;
    for (Vertex r = 0; r < n; ++r) {
      if (r != c) layer.push_back({c, phase, r, dist_a[c]});
    }
  }

  ExhaustiveGuardResult out;
  std::vector<char> seen(key_count, 0);
  for (std::size_t t = 0; t <= max_robber_moves && !layer.empty(); ++t) {
    out.states += layer.size();
    std::vector<Node> next;
    std::fill(seen.begin(), seen.end(), 0);
    for (const Node& s : layer) {
      const GuardDecision d = guard_decide(p, s.cop, s.phase, s.robber);
      const TurnCheck c = check_turn(p, s.cop, s.phase, s.robber, d);
      if (c.illegal) throw std::logic_error("exhaustive_guard_check: guard moved more than one edge");
      if (c.entry_violation) ++out.violations;
      if (c.shadow_violation) ++out.shadow_violations;
      const std::size_t bound = s.d + L;
      if ((d.settled_before_move && t > bound) || (d.settled_after_move && t + 1 > bound) ||
          (d.phase != GuardPhase::Settled && t + 1 > bound)) {
        ++out.settle_violations;
      }
      if (d.cop == s.robber || t == max_robber_moves) continue;
      auto push = [&](Vertex to) {
        if (to == d.cop) return;
        const Node nx{d.cop, d.phase, to, s.d};
        const std::size_t k = key(nx);
        if (!seen[k]) {
          seen[k] = 1;
          next.push_back(nx);
        }
      };
      push(s.robber);
      for (Vertex w : g.neighbors(s.robber)) push(w);
    }
    layer = std::move(next);
  }
  return out;
}

std::vector<std::vector<Vertex>> isometric_paths(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint32_t>> dist(n);
  for (Vertex v = 0; v < n; ++v) dist[v] = distances_from(g, v);

  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur;
  auto extend = [&](auto&& self) -> void {
    out.push_back(cur);
    const Vertex last = cur.back();
    for (Vertex w : g.neighbors(last)) {
      bool ok = true;
      for (std::size_t i = 0; i < cur.size() && ok; ++i) ok = dist[cur[i]][w] == cur.size() - i;
      if (!ok) continue;
      cur.push_back(w);
      self(self);
      cur.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    cur.assign(1, v);
    extend(extend);
  }
  return out;
}

}  // namespace copgame
