#include "pgame/solver.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace pgame {

OrdinaryGame make_ordinary_game(Arena arena, ParityCondition condition) {
  if (arena.counter_count() != 0)
    throw GameError(Errc::HasCounters, "ordinary games cannot contain counter vertices");
  if (condition.size() != arena.vertex_count())
    throw std::invalid_argument("parity condition must be total on the vertex set");
  return OrdinaryGame{std::move(arena), std::move(condition)};
}

namespace {

// Order- and parity-preserving relabelling into 0..2|V|.
std::vector<int> normalize_priorities(std::span<const int> prio) {
  std::vector<int> distinct(prio.begin(), prio.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::map<int, int> relabel;
  int prev_old = 0, prev_new = 0;
  bool first = true;
  for (int p : distinct) {
    int q;
    if (first) {
      q = p % 2;
      first = false;
    } else {
      q = prev_new + ((p - prev_old) % 2 == 0 ? 2 : 1);
    }
    relabel[p] = q;
    prev_old = p;
    prev_new = q;
  }
  std::vector<int> out(prio.size());
  for (size_t v = 0; v < prio.size(); ++v) out[v] = relabel[prio[v]];
  return out;
}

struct Ctx {
  int n = 0;
  std::vector<int> prio;
  std::vector<bool> p2;  // true when Player 2 picks the move; leaves count as Player 1
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;
};

Ctx build_ctx(const OrdinaryGame& g) {
  Ctx c;
  c.n = g.arena.vertex_count();
  c.prio = normalize_priorities(g.condition.priorities());
  c.p2.assign(c.n, false);
  c.out.assign(c.n, {});
  c.in.assign(c.n, {});
  for (int v = 0; v < c.n; ++v) {
    c.p2[v] = g.arena.kind(v) == VertexKind::Player2;
    auto succ = g.arena.plain_successors(v);
    c.out[v].assign(succ.begin(), succ.end());
    for (int u : succ) c.in[u].push_back(v);
  }
  return c;
}

// Attractor restricted to `alive`. Levels are the classic ones (targets at 0),
// so the returned strategy always decreases the level and cannot cycle.
std::pair<std::vector<bool>, std::vector<int>> attract(const Ctx& c, const std::vector<bool>& alive,
                                                       bool for_p2, const std::vector<bool>& targets) {
  std::vector<int> level(c.n, -1);
  std::vector<int> pending(c.n, 0);
  std::deque<int> queue;
  for (int v = 0; v < c.n; ++v) {
    if (!alive[v]) continue;
    if (targets[v]) {
      level[v] = 0;
      queue.push_back(v);
    } else if (c.p2[v] != for_p2) {
      for (int u : c.out[v])
        if (alive[u]) ++pending[v];
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : c.in[u]) {
      if (!alive[v] || level[v] >= 0 || targets[v]) continue;
      if (c.p2[v] == for_p2) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      } else if (--pending[v] == 0) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  std::vector<bool> region(c.n, false);
  std::vector<int> strategy(c.n, -1);
  for (int v = 0; v < c.n; ++v) {
    if (level[v] < 0) continue;
    region[v] = true;
    if (level[v] > 0 && c.p2[v] == for_p2) {
      for (int u : c.out[v]) {
        if (alive[u] && level[u] >= 0 && level[u] < level[v]) {
          strategy[v] = u;  // smallest such index: out[v] is ascending
          break;
        }
      }
    }
  }
  return {std::move(region), std::move(strategy)};
}

struct SubSolution {
  std::vector<bool> w1, w2;
  std::vector<int> s1, s2;
};

SubSolution zielonka(const Ctx& c, const std::vector<bool>& alive, int alive_count) {
  SubSolution r{std::vector<bool>(c.n, false), std::vector<bool>(c.n, false),
                std::vector<int>(c.n, -1), std::vector<int>(c.n, -1)};
  if (alive_count == 0) return r;

  int top = -1;
  for (int v = 0; v < c.n; ++v)
    if (alive[v]) top = std::max(top, c.prio[v]);
  bool p2_turn = (top % 2) == 1;  // player favoured by the top priority

  std::vector<bool> tops(c.n, false);
  for (int v = 0; v < c.n; ++v)
    if (alive[v] && c.prio[v] == top) tops[v] = true;

  auto [head, head_strat] = attract(c, alive, p2_turn, tops);

  std::vector<bool> rest = alive;
  int rest_count = alive_count;
  for (int v = 0; v < c.n; ++v)
    if (head[v]) {
      rest[v] = false;
      --rest_count;
    }

  SubSolution sub = zielonka(c, rest, rest_count);
  const std::vector<bool>& opp_sub = p2_turn ? sub.w1 : sub.w2;
  bool opponent_empty = std::none_of(opp_sub.begin(), opp_sub.end(), [](bool b) { return b; });

  auto& win_turn = p2_turn ? r.w2 : r.w1;
  auto& strat_turn = p2_turn ? r.s2 : r.s1;

  if (opponent_empty) {
    // the whole current subgame belongs to the top-priority player
    for (int v = 0; v < c.n; ++v) {
      if (!alive[v]) continue;
      win_turn[v] = true;
      if (c.p2[v] != p2_turn) continue;
      if (tops[v]) {
        for (int u : c.out[v])
          if (alive[u]) {
            strat_turn[v] = u;
            break;
          }
      } else if (head[v]) {
        strat_turn[v] = head_strat[v];
      } else {
        strat_turn[v] = p2_turn ? sub.s2[v] : sub.s1[v];
      }
    }
    return r;
  }

  auto [lost, lost_strat] = attract(c, alive, !p2_turn, opp_sub);
  std::vector<bool> rest2 = alive;
  int rest2_count = alive_count;
  for (int v = 0; v < c.n; ++v)
    if (lost[v]) {
      rest2[v] = false;
      --rest2_count;
    }
  SubSolution sub2 = zielonka(c, rest2, rest2_count);

  auto& win_opp = p2_turn ? r.w1 : r.w2;
  auto& strat_opp = p2_turn ? r.s1 : r.s2;
  const std::vector<int>& opp_sub_strat = p2_turn ? sub.s1 : sub.s2;
  const std::vector<bool>& opp_sub2 = p2_turn ? sub2.w1 : sub2.w2;
  const std::vector<int>& opp_sub2_strat = p2_turn ? sub2.s1 : sub2.s2;
  const std::vector<bool>& turn_sub2 = p2_turn ? sub2.w2 : sub2.w1;
  const std::vector<int>& turn_sub2_strat = p2_turn ? sub2.s2 : sub2.s1;

  for (int v = 0; v < c.n; ++v) {
    if (!alive[v]) continue;
    if (lost[v]) {
      win_opp[v] = true;
      if (c.p2[v] == p2_turn) continue;
      strat_opp[v] = opp_sub[v] ? opp_sub_strat[v] : lost_strat[v];
    } else if (opp_sub2[v]) {
      win_opp[v] = true;
      if (c.p2[v] != p2_turn) strat_opp[v] = opp_sub2_strat[v];
    } else if (turn_sub2[v]) {
      win_turn[v] = true;
      if (c.p2[v] == p2_turn) strat_turn[v] = turn_sub2_strat[v];
    }
  }
  return r;
}

}  // namespace

AttractorResult attractor(const OrdinaryGame& game, Player player, const std::vector<bool>& targets) {
  if (targets.size() != static_cast<size_t>(game.arena.vertex_count()))
    throw std::invalid_argument("attractor: target mask size mismatch");
  Ctx c = build_ctx(game);
  std::vector<bool> alive(c.n, true);
  auto [region, strategy] = attract(c, alive, player == Player::Two, targets);
  return AttractorResult{std::move(region), std::move(strategy)};
}

Solution solve(const OrdinaryGame& game) {
  Ctx c = build_ctx(game);
  std::vector<bool> alive(c.n, true);
  SubSolution s = zielonka(c, alive, c.n);
  Solution out;
  out.win1 = std::move(s.w1);
  out.strategy1.assign(c.n, -1);
  out.strategy2.assign(c.n, -1);
  for (int v = 0; v < c.n; ++v) {
    if (game.arena.kind(v) == VertexKind::Player1 && out.win1[v]) out.strategy1[v] = s.s1[v];
    if (game.arena.kind(v) == VertexKind::Player2 && !out.win1[v]) out.strategy2[v] = s.s2[v];
  }
  return out;
}

namespace {

// Strongly connected components of the restricted subgraph, Tarjan, iterative.
std::vector<int> scc_of(const std::vector<std::vector<int>>& adj, const std::vector<bool>& present) {
  int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1), low(n, 0), disc(n, -1), stack_pos(n, -1);
  std::vector<int> stack;
  int time = 0, comps = 0;
  struct Frame {
    int v;
    size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (!present[root] || disc[root] >= 0) continue;
    std::vector<Frame> frames{{root, 0}};
    disc[root] = low[root] = time++;
    stack_pos[root] = static_cast<int>(stack.size());
    stack.push_back(root);
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < adj[f.v].size()) {
        int u = adj[f.v][f.child++];
        if (!present[u]) continue;
        if (disc[u] < 0) {
          disc[u] = low[u] = time++;
          stack_pos[u] = static_cast<int>(stack.size());
          stack.push_back(u);
          frames.push_back({u, 0});
        } else if (stack_pos[u] >= 0) {
          low[f.v] = std::min(low[f.v], disc[u]);
        }
      } else {
        if (low[f.v] == disc[f.v]) {
          while (true) {
            int u = stack.back();
            stack.pop_back();
            stack_pos[u] = -1;
            comp[u] = comps;
            if (u == f.v) break;
          }
          ++comps;
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return comp;
}

}  // namespace

bool verify_strategy(const OrdinaryGame& game, Player player, const std::vector<bool>& region,
                     const std::vector<int>& strategy) {
  const Arena& a = game.arena;
  int n = a.vertex_count();
  if (region.size() != static_cast<size_t>(n) || strategy.size() != static_cast<size_t>(n))
    throw std::invalid_argument("verify_strategy: mask size mismatch");
  VertexKind own = player == Player::One ? VertexKind::Player1 : VertexKind::Player2;

  for (int v = 0; v < n; ++v) {
    if (!region[v] || a.kind(v) != own) continue;
    if (strategy[v] < 0)
      throw GameError(Errc::IncompleteStrategy, "no move for " + a.id(v) + " inside the claimed region");
    if (!a.has_plain_edge(v, strategy[v]))
      throw GameError(Errc::IncompleteStrategy, "strategy move from " + a.id(v) + " is not an edge");
  }

  // restricted subgraph: the player keeps only the strategy edge
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) {
    if (!region[v]) continue;
    if (a.kind(v) == own) {
      if (!region[strategy[v]]) return false;
      adj[v].push_back(strategy[v]);
    } else {
      for (int u : a.plain_successors(v)) {
        if (!region[u]) return false;  // opponent escapes the region
        adj[v].push_back(u);
      }
    }
  }

  // no cycle whose maximum priority favours the opponent
  int bad_parity = player == Player::One ? 1 : 0;
  std::vector<int> prios;
  for (int v = 0; v < n; ++v)
    if (region[v] && game.condition.priority(v) % 2 == bad_parity) prios.push_back(game.condition.priority(v));
  std::sort(prios.begin(), prios.end());
  prios.erase(std::unique(prios.begin(), prios.end()), prios.end());

  for (int p : prios) {
    std::vector<bool> present(n, false);
    for (int v = 0; v < n; ++v) present[v] = region[v] && game.condition.priority(v) <= p;
    std::vector<int> comp = scc_of(adj, present);
    std::vector<int> comp_size(n, 0);
    for (int v = 0; v < n; ++v)
      if (present[v]) ++comp_size[comp[v]];
    for (int v = 0; v < n; ++v) {
      if (!present[v] || game.condition.priority(v) != p) continue;
      bool self_loop = std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end();
      if (self_loop || comp_size[comp[v]] > 1) return false;
    }
  }
  return true;
}

}  // namespace pgame
