#include "copgame/game.hpp"

#include <algorithm>
#include <string>

namespace copgame {

StateLimitExceeded::StateLimitExceeded(std::uint64_t estimate, std::uint64_t limit)
    : std::runtime_error("state space of " + std::to_string(estimate) + " positions exceeds the limit of " +
                         std::to_string(limit)),
      estimate_(estimate),
      limit_(limit) {}

std::uint64_t estimate_state_count(std::size_t n, std::size_t k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // C(n+k-1, k) built incrementally as C(n-1+j, j), exact at every step.
  unsigned __int128 c = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    c = c * (n - 1 + j) / j;
    if (c > kMax) return kMax;
  }
  c = c * n * 2;
  return c > kMax ? kMax : static_cast<std::uint64_t>(c);
}

StateSpace::StateSpace(Graph g, std::size_t k) : graph_(std::move(g)), n_(graph_.vertex_count()), k_(k) {
  if (n_ == 0) throw std::invalid_argument("StateSpace: empty graph");
  if (k_ == 0) throw std::invalid_argument("StateSpace: need at least one cop");
  const std::size_t m = n_ + k_;
  binom_.assign(m + 1, std::vector<std::uint64_t>(k_ + 2, 0));
  for (std::size_t i = 0; i <= m; ++i) {
    binom_[i][0] = 1;
    for (std::size_t j = 1; j <= std::min(i, k_ + 1); ++j) {
      binom_[i][j] = binom_[i - 1][j - 1] + (j <= i - 1 ? binom_[i - 1][j] : 0);
    }
  }
  const std::uint64_t count = binom_[n_ + k_ - 1][k_];
  if (count > std::numeric_limits<std::uint32_t>::max() - 1) {
    throw StateLimitExceeded(estimate_state_count(n_, k_), std::uint64_t{std::numeric_limits<std::uint32_t>::max()});
  }
  placements_ = static_cast<std::uint32_t>(count);
  table_.resize(std::size_t{placements_} * k_);

  std::vector<Vertex> cur(k_, 0);
  for (;;) {
    const std::uint32_t id = rank(cur);
    std::copy(cur.begin(), cur.end(), table_.begin() + static_cast<std::ptrdiff_t>(std::size_t{id} * k_));
    // Next nondecreasing tuple in lexicographic order.
    std::size_t i = k_;
    while (i > 0 && cur[i - 1] == n_ - 1) --i;
    if (i == 0) break;
    const Vertex v = cur[i - 1] + 1;
    std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i - 1), cur.end(), v);
  }
}

std::uint32_t StateSpace::rank(std::span<const Vertex> cops) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < cops.size(); ++i) r += binom_[cops[i] + i][i + 1];
  return static_cast<std::uint32_t>(r);
}

std::uint64_t StateSpace::index(const GameState& s) const {
  if (s.cops.size() != k_) throw std::invalid_argument("GameState: wrong number of cops");
  if (!std::is_sorted(s.cops.begin(), s.cops.end())) throw std::invalid_argument("GameState: cops not sorted");
  if (s.robber >= n_ || (!s.cops.empty() && s.cops.back() >= n_)) {
    throw std::invalid_argument("GameState: vertex out of range");
  }
  return index(rank(s.cops), s.robber, s.to_move);
}

GameState StateSpace::state(std::uint64_t index) const {
  GameState s;
  s.to_move = static_cast<Side>(index % 2);
  index /= 2;
  s.robber = static_cast<Vertex>(index % n_);
  const auto p = placement(static_cast<std::uint32_t>(index / n_));
  s.cops.assign(p.begin(), p.end());
  return s;
}

bool StateSpace::captured(std::uint32_t placement_id, Vertex robber) const {
  const auto p = placement(placement_id);
  return std::binary_search(p.begin(), p.end(), robber);
}

void StateSpace::joint_moves(std::uint32_t placement_id, std::vector<std::uint32_t>& out) const {
  out.clear();
  const auto from = placement(placement_id);
  // Odometer over each cop's closed neighborhood; choice[i] == deg means "stay".
  std::vector<std::size_t> choice(k_, 0);
  std::vector<Vertex> target(k_);
  for (;;) {
    for (std::size_t i = 0; i < k_; ++i) {
      const auto nb = graph_.neighbors(from[i]);
      target[i] = choice[i] == nb.size() ? from[i] : nb[choice[i]];
    }
    std::sort(target.begin(), target.end());
    out.push_back(rank(target));
    std::size_t i = 0;
    while (i < k_ && ++choice[i] > graph_.degree(from[i])) choice[i++] = 0;
    if (i == k_) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

Vertex SolveResult::best_robber_placement(std::span<const Vertex> cops) const {
  const std::uint32_t pid = space->rank(cops);
  Vertex best = 0;
  std::uint32_t best_time = capture_time[space->index(pid, 0, Side::Cops)];
  for (Vertex r = 1; r < space->vertex_count(); ++r) {
    // kNotCaptured is the largest value, so escape beats any finite time.
    const std::uint32_t t = capture_time[space->index(pid, r, Side::Cops)];
    if (t > best_time) {
      best = r;
      best_time = t;
    }
  }
  return best;
}

namespace {

// Joint-move lists for every placement, kept only while they fit a fixed budget.
class MoveCache {
public:
  explicit MoveCache(const StateSpace& space) : space_(space) {
    constexpr std::uint64_t kBudget = 64'000'000;
    std::uint64_t per = 1;
    std::size_t max_deg = 0;
    for (Vertex v = 0; v < space.vertex_count(); ++v) max_deg = std::max(max_deg, space.graph().degree(v));
    for (std::size_t i = 0; i < space.cops() && per <= kBudget; ++i) per *= max_deg + 1;
    per = std::min<std::uint64_t>(per, space.placement_count());
    if (per * space.placement_count() > kBudget) return;
    offsets_.reserve(std::size_t{space.placement_count()} + 1);
    offsets_.push_back(0);
    std::vector<std::uint32_t> buf;
    for (std::uint32_t p = 0; p < space.placement_count(); ++p) {
      space.joint_moves(p, buf);
      moves_.insert(moves_.end(), buf.begin(), buf.end());
      offsets_.push_back(moves_.size());
    }
  }

  std::span<const std::uint32_t> get(std::uint32_t p, std::vector<std::uint32_t>& scratch) const {
    if (offsets_.empty()) {
      space_.joint_moves(p, scratch);
      return scratch;
    }
    return {moves_.data() + offsets_[p], moves_.data() + offsets_[p + 1]};
  }

private:
  const StateSpace& space_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> moves_;
};

}  // namespace

SolveResult solve(const Graph& g, std::size_t k, const SolveLimits& limits) {
  if (g.vertex_count() == 0) throw std::invalid_argument("solve: empty graph");
  if (k == 0) throw std::invalid_argument("solve: need at least one cop");
  if (!is_connected(g)) throw DisconnectedGraphError("solve: graph is disconnected; use cop_number");
  const std::uint64_t estimate = estimate_state_count(g.vertex_count(), k);
  if (estimate > limits.max_states) throw StateLimitExceeded(estimate, limits.max_states);

  auto space = std::make_shared<const StateSpace>(g, k);
  const StateSpace& sp = *space;
  const std::size_t n = sp.vertex_count();
  const std::uint32_t placements = sp.placement_count();
  const Graph& graph = sp.graph();

  SolveResult res;
  res.space = space;
  res.k = k;
  res.state_count = sp.state_count();
  res.capture_time.assign(res.state_count, kNotCaptured);
  auto& time = res.capture_time;

  // Robber-to-move positions: robber options not yet known to lose.
  std::vector<std::uint32_t> pending(std::size_t{placements} * n);
  for (std::uint32_t p = 0; p < placements; ++p) {
    for (Vertex r = 0; r < n; ++r) pending[std::size_t{p} * n + r] = static_cast<std::uint32_t>(graph.degree(r) + 1);
  }

  // Level t lists of (placement * n + robber) keys.
  std::vector<std::uint64_t> cop_level;
  std::vector<std::uint64_t> robber_level;
  for (std::uint32_t p = 0; p < placements; ++p) {
    const auto cops = sp.placement(p);
    for (std::size_t i = 0; i < cops.size(); ++i) {
      if (i > 0 && cops[i] == cops[i - 1]) continue;
      const std::uint64_t key = std::uint64_t{p} * n + cops[i];
      time[key * 2] = 0;
      time[key * 2 + 1] = 0;
      cop_level.push_back(key);
      robber_level.push_back(key);
    }
  }

  MoveCache cache(sp);
  std::vector<std::uint32_t> scratch;
  std::vector<std::uint64_t> next_cop_level;
  for (std::uint32_t t = 0;; ++t) {
    // Robber-to-move positions whose every option is now won at <= t.
    for (const std::uint64_t key : cop_level) {
      const std::uint64_t p = key / n;
      const auto r = static_cast<Vertex>(key % n);
      auto visit = [&](Vertex from) {
        const std::uint64_t pre = p * n + from;
        if (time[pre * 2 + 1] != kNotCaptured) return;
        if (--pending[pre] == 0) {
          time[pre * 2 + 1] = t;
          robber_level.push_back(pre);
        }
      };
      visit(r);
      for (Vertex from : graph.neighbors(r)) visit(from);
    }
    // Cop-to-move positions with a joint move into a level-t robber position.
    next_cop_level.clear();
    for (const std::uint64_t key : robber_level) {
      const auto p = static_cast<std::uint32_t>(key / n);
      const auto r = static_cast<Vertex>(key % n);
      for (const std::uint32_t q : cache.get(p, scratch)) {
        const std::uint64_t pre = std::uint64_t{q} * n + r;
        if (time[pre * 2] == kNotCaptured) {
          time[pre * 2] = t + 1;
          next_cop_level.push_back(pre);
        }
      }
    }
    res.levels = t + 1;
    if (next_cop_level.empty()) break;
    cop_level.swap(next_cop_level);
    robber_level.clear();
  }

  std::uint32_t best_value = kNotCaptured;
  std::optional<std::uint32_t> best_placement;
  for (std::uint32_t p = 0; p < placements; ++p) {
    std::uint32_t worst = 0;
    for (Vertex r = 0; r < n && worst != kNotCaptured; ++r) {
      worst = std::max(worst, time[sp.index(p, r, Side::Cops)]);
    }
    if (worst != kNotCaptured && (!best_placement || worst < best_value)) {
      best_value = worst;
      best_placement = p;
    }
  }
  res.cop_win = best_placement.has_value();
  if (res.cop_win) {
    const auto cops = sp.placement(*best_placement);
    res.winning_initial_placement = std::vector<Vertex>(cops.begin(), cops.end());
    res.capture_time_max = best_value;
  }
  return res;
}

CopNumberResult cop_number_detail(const Graph& g, const SolveLimits& limits) {
  if (g.vertex_count() == 0) throw std::invalid_argument("cop_number: empty graph");
  CopNumberResult out;
  for (auto& vertices : components(g)) {
    const Graph sub = induced_subgraph(g, vertices);
    for (std::size_t k = 1;; ++k) {
      SolveResult r = solve(sub, k, limits);
      if (r.cop_win) {
        out.cop_number += k;
        out.components.push_back({std::move(vertices), k, std::move(r)});
        break;
      }
    }
  }
  return out;
}

std::size_t cop_number(const Graph& g, const SolveLimits& limits) { return cop_number_detail(g, limits).cop_number; }

bool is_copwin_dismantlable(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("is_copwin_dismantlable: empty graph");
  if (!is_connected(g)) throw DisconnectedGraphError("is_copwin_dismantlable: graph is disconnected");
  std::vector<std::vector<bool>> closed(n, std::vector<bool>(n, false));
  for (Vertex v = 0; v < n; ++v) {
    closed[v][v] = true;
    for (Vertex w : g.neighbors(v)) closed[v][w] = true;
  }
  std::vector<bool> alive(n, true);
  std::size_t remaining = n;
  // v is a corner when some other live u has N[v] within N[u]; such a u must be a neighbor.
  auto dominated = [&](Vertex v) {
    for (Vertex u : g.neighbors(v)) {
      if (!alive[u]) continue;
      bool inside = true;
      for (Vertex w = 0; w < n && inside; ++w) {
        if (alive[w] && closed[v][w] && !closed[u][w]) inside = false;
      }
      if (inside) return true;
    }
    return false;
  };
  while (remaining > 1) {
    bool removed = false;
    for (Vertex v = 0; v < n && !removed; ++v) {
      if (alive[v] && dominated(v)) {
        alive[v] = false;
        --remaining;
        removed = true;
      }
    }
    if (!removed) return false;
  }
  return true;
}

bool StrategyTable::defined(std::span<const Vertex> cops, Vertex robber) const {
  return move_of[std::size_t{space->rank(cops)} * space->vertex_count() + robber] != kNoMove;
}

std::optional<GameState> StrategyTable::next(const GameState& s) const {
  if (s.to_move != side) return std::nullopt;
  space->index(s);  // validates
  const std::uint32_t pid = space->rank(s.cops);
  const std::uint32_t m = move_of[std::size_t{pid} * space->vertex_count() + s.robber];
  if (m == kNoMove) return std::nullopt;
  GameState out = s;
  out.to_move = side == Side::Cops ? Side::Robber : Side::Cops;
  if (side == Side::Cops) {
    const auto p = space->placement(m);
    out.cops.assign(p.begin(), p.end());
  } else {
    out.robber = m;
  }
  return out;
}

StrategyTable extract_strategy(const SolveResult& result, Side side) {
  if (side == Side::Cops && !result.cop_win) {
    throw std::invalid_argument("extract_strategy: cops lose with k = " + std::to_string(result.k));
  }
  if (side == Side::Robber && result.cop_win) {
    throw std::invalid_argument("extract_strategy: robber loses against k = " + std::to_string(result.k));
  }
  const StateSpace& sp = *result.space;
  const std::size_t n = sp.vertex_count();
  const Graph& graph = sp.graph();
  const auto& time = result.capture_time;
  StrategyTable table{side, result.space, std::vector<std::uint32_t>(std::size_t{sp.placement_count()} * n, kNoMove)};
  std::vector<std::uint32_t> moves;
  for (std::uint32_t p = 0; p < sp.placement_count(); ++p) {
    if (side == Side::Cops) sp.joint_moves(p, moves);
    for (Vertex r = 0; r < n; ++r) {
      if (sp.captured(p, r)) continue;
      const std::size_t key = std::size_t{p} * n + r;
      if (side == Side::Cops) {
        const std::uint32_t t = time[sp.index(p, r, Side::Cops)];
        if (t == kNotCaptured) continue;
        for (const std::uint32_t q : moves) {
          if (time[sp.index(q, r, Side::Robber)] == t - 1) {
            table.move_of[key] = q;
            break;
          }
        }
      } else {
        if (time[sp.index(p, r, Side::Robber)] != kNotCaptured) continue;
        auto safe = [&](Vertex to) { return time[sp.index(p, to, Side::Cops)] == kNotCaptured; };
        if (safe(r)) {
          table.move_of[key] = r;
          continue;
        }
        for (Vertex to : graph.neighbors(r)) {
          if (safe(to)) {
            table.move_of[key] = to;
            break;
          }
        }
      }
    }
  }
  return table;
}

namespace {

bool guarded(const Graph& g, std::span<const Vertex> cops, Vertex u) {
  return std::any_of(cops.begin(), cops.end(), [&](Vertex c) { return c == u || g.has_edge(c, u); });
}

std::optional<Vertex> escape(const Graph& g, std::span<const Vertex> cops, Vertex robber) {
  if (robber >= g.vertex_count()) throw std::invalid_argument("girth5_escape_move: robber out of range");
  for (Vertex u : g.neighbors(robber)) {
    if (!guarded(g, cops, u)) return u;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Vertex> girth5_escape_move(const Graph& g, std::span<const Vertex> cops, Vertex robber) {
  const auto gi = girth(g);
  if (gi && *gi < 5) throw std::invalid_argument("girth5_escape_move: girth " + std::to_string(*gi) + " < 5");
  return escape(g, cops, robber);
}

Girth5Escape::Girth5Escape(const Graph& g) : graph_(g) {
  const auto gi = girth(g);
  if (gi && *gi < 5) throw std::invalid_argument("Girth5Escape: girth " + std::to_string(*gi) + " < 5");
}

std::optional<Vertex> Girth5Escape::move(std::span<const Vertex> cops, Vertex robber) const {
  return escape(graph_, cops, robber);
}

std::optional<Vertex> Girth5Escape::placement(std::span<const Vertex> cops) const {
  for (Vertex v = 0; v < graph_.vertex_count(); ++v) {
    if (!guarded(graph_, cops, v)) return v;
  }
  return std::nullopt;
}

}  // namespace copgame
