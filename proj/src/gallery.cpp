#include "pgame/gallery.hpp"

#include <set>

namespace pgame {

GameWithStart build_linear(int length) {
  if (length < 1) throw std::invalid_argument("build_linear: length must be at least 1");
  RawArena raw;
  raw.vertices.push_back({"l1", VertexKind::Leaf, 0});
  raw.vertices.push_back({"l2", VertexKind::Leaf, 0});
  for (int i = 0; i < length; ++i) {
    std::string id = "v" + std::to_string(i);
    raw.vertices.push_back({id, VertexKind::Counter, 1});
    raw.edges.push_back({id, i + 1 < length ? "v" + std::to_string(i + 1) : "l1", EdgeColor::Green});
    raw.edges.push_back({id, "l2", EdgeColor::Red});
  }
  Arena arena = validate_arena(raw);
  int l1 = arena.index_of("l1");
  ParityCondition cond = reach_condition(arena, std::vector<int>{l1});
  int start = arena.index_of("v0");
  return {ParamGame{std::move(arena), std::move(cond)}, start};
}

HelpmeGame build_helpme(bool parameterized) {
  RawArena raw;
  raw.vertices.push_back({"l1", VertexKind::Leaf, 0});
  raw.vertices.push_back({"l2", VertexKind::Leaf, 0});
  raw.vertices.push_back({"v1", VertexKind::Player2, 0});
  raw.edges.push_back({"v1", "v0", EdgeColor::Plain});
  raw.edges.push_back({"v1", "l2", EdgeColor::Plain});
  if (parameterized) {
    raw.vertices.push_back({"v0", VertexKind::Counter, 1});
    raw.edges.push_back({"v0", "v1", EdgeColor::Green});
    raw.edges.push_back({"v0", "l1", EdgeColor::Red});
  } else {
    raw.vertices.push_back({"v0", VertexKind::Player1, 0});
    raw.edges.push_back({"v0", "v1", EdgeColor::Plain});
    raw.edges.push_back({"v0", "l1", EdgeColor::Plain});
  }
  HelpmeGame g;
  g.arena = validate_arena(raw);
  int l1 = g.arena.index_of("l1");
  int l2 = g.arena.index_of("l2");
  g.payoff_at_least_1 = reach_condition(g.arena, std::vector<int>{l1, l2});
  g.payoff_at_least_2 = reach_condition(g.arena, std::vector<int>{l2});
  g.start = g.arena.index_of("v0");
  return g;
}

SpernerGadget sperner_gadget(const GadgetSpec& spec) {
  int m = spec.circuit.input_count;
  if (static_cast<int>(spec.circuit.outputs.size()) != m)
    throw GameError(Errc::ArityMismatch, "gadget circuit needs matching arity");
  if (spec.w.size() != m || spec.fw.size() != m)
    throw GameError(Errc::ArityMismatch, "gadget words must match the circuit arity");
  if (circuit_eval(spec.circuit, spec.w) != spec.fw)
    throw std::invalid_argument("gadget spec: fw must be the circuit's image of w");

  GraphGameForm g = circuit_to_ggf(spec.circuit);
  const Arena& a = g.game.arena;
  RawArena raw = a.to_raw();

  std::set<std::string> used;
  for (const auto& v : raw.vertices) used.insert(v.id);
  auto fresh = [&used](std::string base) {
    while (used.count(base)) base += "'";
    used.insert(base);
    return base;
  };
  std::string goal = fresh("goal");
  std::string trap = fresh("trap");
  std::string start = fresh("start");
  raw.vertices.push_back({goal, VertexKind::Leaf, 0});
  raw.vertices.push_back({trap, VertexKind::Leaf, 0});

  // designated leaves become the counter vertices of the single class
  std::vector<std::string> reentry(m);
  for (int k = 0; k < m; ++k) {
    const std::string& lid = a.id(g.inputs[k]);
    reentry[k] = lid;
    for (auto& v : raw.vertices)
      if (v.id == lid) {
        v.kind = VertexKind::Counter;
        v.counter_class = 1;
      }
    std::erase_if(raw.edges, [&](const RawEdge& e) { return e.from == lid; });
    raw.edges.push_back({lid, a.id(g.outputs[k]), EdgeColor::Green});
    raw.edges.push_back({lid, spec.fw.get(k) ? goal : trap, EdgeColor::Red});
  }

  bool degenerate = spec.w.bits() == 0;
  raw.vertices.push_back({start, VertexKind::Player2, 0});
  if (degenerate) {
    raw.edges.push_back({start, goal, EdgeColor::Plain});
  } else {
    for (int k = 0; k < m; ++k)
      if (spec.w.get(k)) raw.edges.push_back({start, reentry[k], EdgeColor::Plain});
  }

  Arena arena = validate_arena(raw);
  // winning leaves: the fresh goal plus the circuit's fixed-true leaves
  std::vector<int> winning;
  winning.push_back(arena.index_of(goal));
  for (int v = 0; v < a.vertex_count(); ++v)
    if (a.is_leaf(v) && g.game.condition.priority(v) == 2) {
      int mapped = arena.index_of(a.id(v));
      if (arena.is_leaf(mapped)) winning.push_back(mapped);
    }
  ParityCondition cond = reach_condition(arena, winning);
  int start_index = arena.index_of(start);
  return {ParamGame{std::move(arena), std::move(cond)}, start_index, degenerate};
}

}  // namespace pgame
