#include "pgame/unfold.hpp"

#include <deque>
#include <map>
#include <string>

namespace pgame {

namespace {

std::string product_id(const Arena& a, int v, const ParameterVector& counters) {
  if (counters.empty()) return a.id(v);
  std::string s = a.id(v) + "@";
  for (size_t j = 0; j < counters.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(counters[j]);
  }
  return s;
}

}  // namespace

UnfoldedGame unfold(const ParamGame& pg, const ParameterVector& params, int start) {
  const Arena& a = pg.arena;
  if (params.size() != static_cast<size_t>(a.counter_count()))
    throw std::invalid_argument("unfold: parameter vector length mismatch");
  if (start < 0 || start >= a.vertex_count()) throw std::invalid_argument("unfold: bad start vertex");

  using State = std::pair<int, ParameterVector>;
  std::map<State, int> state_index;
  std::vector<State> states;
  std::deque<int> work;

  auto intern = [&](const State& s) {
    auto [it, fresh] = state_index.emplace(s, static_cast<int>(states.size()));
    if (fresh) {
      states.push_back(s);
      work.push_back(it->second);
    }
    return it->second;
  };

  intern({start, params});

  RawArena raw;
  std::vector<std::pair<std::string, int>> prios;  // id -> priority
  while (!work.empty()) {
    int si = work.front();
    work.pop_front();
    auto [v, counters] = states[si];
    std::string sid = product_id(a, v, counters);
    prios.emplace_back(sid, pg.condition.priority(v));
    switch (a.kind(v)) {
      case VertexKind::Leaf:
        raw.vertices.push_back({sid, VertexKind::Leaf, 0});
        break;
      case VertexKind::Counter: {
        RunState next = step(a, RunState{v, counters, 0});
        if (next.vertex == v && next.counters == counters) {
          // red self-loop at value zero: the state is absorbing
          raw.vertices.push_back({sid, VertexKind::Leaf, 0});
          break;
        }
        // deterministic move: ownership is inert, modelled as Player 1
        raw.vertices.push_back({sid, VertexKind::Player1, 0});
        int ti = intern({next.vertex, next.counters});
        raw.edges.push_back({sid, product_id(a, states[ti].first, states[ti].second), EdgeColor::Plain});
        break;
      }
      case VertexKind::Player1:
      case VertexKind::Player2:
        raw.vertices.push_back({sid, a.kind(v), 0});
        for (int u : a.plain_successors(v)) {
          intern({u, counters});
          raw.edges.push_back({sid, product_id(a, u, counters), EdgeColor::Plain});
        }
        break;
    }
  }

  Arena product = validate_arena(raw);
  std::vector<int> prio(product.vertex_count(), 0);
  for (const auto& [sid, p] : prios) prio[product.index_of(sid)] = p;

  UnfoldedGame out;
  out.game = make_ordinary_game(std::move(product), ParityCondition(std::move(prio)));
  out.back_map.resize(out.game.arena.vertex_count());
  for (const auto& [state, si] : state_index) {
    (void)si;
    int idx = out.game.arena.index_of(product_id(a, state.first, state.second));
    out.back_map[idx] = state;
  }
  out.start = out.game.arena.index_of(product_id(a, start, params));
  return out;
}

bool wins_with_params(const ParamGame& pg, const ParameterVector& params, int start) {
  UnfoldedGame u = unfold(pg, params, start);
  Solution s = solve(u.game);
  return s.win1[u.start];
}

}  // namespace pgame
