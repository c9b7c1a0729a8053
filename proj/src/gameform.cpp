#include "pgame/gameform.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pgame/solver.hpp"
#include "pgame/unfold.hpp"

namespace pgame {

bool MonotoneCircuit::operator==(const MonotoneCircuit& o) const {
  if (input_count != o.input_count || outputs != o.outputs || ids != o.ids ||
      gates.size() != o.gates.size())
    return false;
  for (size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    const Gate& h = o.gates[i];
    if (g.kind != h.kind || g.children != h.children) return false;
    if (g.kind == GateKind::Input && g.input != h.input) return false;
    if (g.kind == GateKind::Const && g.value != h.value) return false;
  }
  return true;
}

void validate_circuit(const MonotoneCircuit& c) {
  int n = static_cast<int>(c.gates.size());
  if (c.ids.size() != c.gates.size()) throw std::invalid_argument("circuit: ids must parallel gates");
  {
    std::set<std::string> seen(c.ids.begin(), c.ids.end());
    if (static_cast<int>(seen.size()) != n) throw std::invalid_argument("circuit: duplicate gate id");
  }
  std::set<int> used_inputs;
  for (int i = 0; i < n; ++i) {
    const auto& g = c.gates[i];
    switch (g.kind) {
      case MonotoneCircuit::GateKind::And:
      case MonotoneCircuit::GateKind::Or:
        if (g.children.empty()) throw std::invalid_argument("circuit: gate with empty fan-in");
        for (int ch : g.children)
          if (ch < 0 || ch >= n) throw std::invalid_argument("circuit: child out of range");
        break;
      case MonotoneCircuit::GateKind::Input:
        if (g.input < 1 || g.input > c.input_count)
          throw std::invalid_argument("circuit: input index out of range");
        if (!used_inputs.insert(g.input).second)
          throw std::invalid_argument("circuit: duplicate input index");
        if (!g.children.empty()) throw std::invalid_argument("circuit: input gate cannot have children");
        break;
      case MonotoneCircuit::GateKind::Const:
        if (!g.children.empty()) throw std::invalid_argument("circuit: const gate cannot have children");
        break;
    }
  }
  for (int out : c.outputs)
    if (out < 0 || out >= n) throw std::invalid_argument("circuit: output out of range");

  // acyclicity
  std::vector<int> state(n, 0);
  std::vector<std::pair<int, size_t>> stack;
  for (int root = 0; root < n; ++root) {
    if (state[root]) continue;
    stack.push_back({root, 0});
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, child] = stack.back();
      if (child < c.gates[v].children.size()) {
        int u = c.gates[v].children[child++];
        if (state[u] == 1) throw std::invalid_argument("circuit: cycle through gate " + c.ids[u]);
        if (state[u] == 0) {
          state[u] = 1;
          stack.push_back({u, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
}

BoolFunction::BoolFunction(int m, int n, std::vector<std::uint32_t> table)
    : m_(m), n_(n), table_(std::move(table)) {
  if (m < 0 || m > max_tabulated_arity) throw GameError(Errc::ArityTooLarge, "table input arity");
  if (n < 0 || n > 32) throw GameError(Errc::ArityTooLarge, "table output arity");
  if (table_.size() != (std::size_t{1} << m)) throw std::invalid_argument("table size mismatch");
}

BitVector BoolFunction::apply(const BitVector& in) const {
  if (in.size() != m_) throw GameError(Errc::ArityMismatch, "apply: input width");
  return BitVector(n_, row(static_cast<std::uint32_t>(in.bits())));
}

GraphGameForm make_ggf(ParamGame game, ParameterVector fixed_params, std::vector<int> inputs,
                       std::vector<int> outputs) {
  const Arena& a = game.arena;
  if (fixed_params.size() != static_cast<size_t>(a.counter_count()))
    throw GameError(Errc::ArityMismatch, "fixed parameter vector length mismatch");
  std::set<int> in_set;
  for (int l : inputs) {
    if (l < 0 || l >= a.vertex_count() || !a.is_leaf(l))
      throw GameError(Errc::NotALeaf, "designated input must be a leaf");
    if (!in_set.insert(l).second) throw std::invalid_argument("duplicate designated input leaf");
  }
  std::set<int> out_set;
  for (int s : outputs) {
    if (s < 0 || s >= a.vertex_count()) throw std::invalid_argument("designated output out of range");
    if (!out_set.insert(s).second) throw std::invalid_argument("duplicate designated output");
    if (in_set.count(s))
      throw std::invalid_argument("designated output may not be a designated input leaf");
  }
  return GraphGameForm{std::move(game), std::move(fixed_params), std::move(inputs), std::move(outputs)};
}

BitVector evaluate_ggf(const GraphGameForm& g, const BitVector& input) {
  if (input.size() != static_cast<int>(g.inputs.size()))
    throw GameError(Errc::ArityMismatch, "evaluate_ggf: input width");
  ParityCondition cond = g.game.condition;
  for (size_t i = 0; i < g.inputs.size(); ++i)
    cond.set_priority(g.inputs[i], input.get(static_cast<int>(i)) ? 2 : 1);

  BitVector out(static_cast<int>(g.outputs.size()));
  if (g.game.arena.counter_count() == 0) {
    // one whole-arena solve answers every output
    Solution sol = solve(make_ordinary_game(g.game.arena, std::move(cond)));
    for (size_t j = 0; j < g.outputs.size(); ++j) out.set(static_cast<int>(j), sol.win1[g.outputs[j]]);
  } else {
    ParamGame modified{g.game.arena, std::move(cond)};
    for (size_t j = 0; j < g.outputs.size(); ++j)
      out.set(static_cast<int>(j), wins_with_params(modified, g.fixed_params, g.outputs[j]));
  }
  return out;
}

BoolFunction define_function(const GraphGameForm& g) {
  int m = static_cast<int>(g.inputs.size());
  int n = static_cast<int>(g.outputs.size());
  if (m > BoolFunction::max_tabulated_arity)
    throw GameError(Errc::ArityTooLarge, "define_function: too many inputs to tabulate");
  if (n > 32) throw GameError(Errc::ArityTooLarge, "define_function: too many outputs to tabulate");
  std::vector<std::uint32_t> table(std::size_t{1} << m);
  for (std::uint32_t w = 0; w < table.size(); ++w)
    table[w] = static_cast<std::uint32_t>(evaluate_ggf(g, BitVector(m, w)).bits());
  return BoolFunction(m, n, std::move(table));
}

std::optional<std::pair<BitVector, BitVector>> monotone_counterexample(const BoolFunction& f) {
  int m = f.input_arity();
  for (std::uint32_t w = 0; w < (std::uint32_t{1} << m); ++w) {
    for (int i = 0; i < m; ++i) {
      if (w & (1u << i)) continue;
      std::uint32_t u = w | (1u << i);
      if ((f.row(w) & ~f.row(u)) != 0)
        return std::make_pair(BitVector(m, w), BitVector(m, u));
    }
  }
  return std::nullopt;
}

bool is_monotone(const BoolFunction& f) { return !monotone_counterexample(f); }

BitVector circuit_eval(const MonotoneCircuit& c, const BitVector& input) {
  if (input.size() != c.input_count) throw GameError(Errc::ArityMismatch, "circuit_eval: input width");
  int n = static_cast<int>(c.gates.size());
  std::vector<char> value(n, -1);
  // children-first evaluation with an explicit stack
  for (int root = 0; root < n; ++root) {
    if (value[root] >= 0) continue;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      if (value[v] >= 0) {
        stack.pop_back();
        continue;
      }
      const auto& g = c.gates[v];
      switch (g.kind) {
        case MonotoneCircuit::GateKind::Input:
          value[v] = input.get(g.input - 1);
          stack.pop_back();
          break;
        case MonotoneCircuit::GateKind::Const:
          value[v] = g.value;
          stack.pop_back();
          break;
        case MonotoneCircuit::GateKind::And:
        case MonotoneCircuit::GateKind::Or: {
          bool ready = true;
          for (int ch : g.children)
            if (value[ch] < 0) {
              stack.push_back(ch);
              ready = false;
            }
          if (!ready) break;
          bool acc = g.kind == MonotoneCircuit::GateKind::And;
          for (int ch : g.children) {
            if (g.kind == MonotoneCircuit::GateKind::And)
              acc = acc && value[ch];
            else
              acc = acc || value[ch];
          }
          value[v] = acc;
          stack.pop_back();
          break;
        }
      }
    }
  }
  BitVector out(static_cast<int>(c.outputs.size()));
  for (size_t j = 0; j < c.outputs.size(); ++j) out.set(static_cast<int>(j), value[c.outputs[j]] == 1);
  return out;
}

BoolFunction tabulate_circuit(const MonotoneCircuit& c) {
  int m = c.input_count;
  if (m > BoolFunction::max_tabulated_arity) throw GameError(Errc::ArityTooLarge, "tabulate_circuit");
  if (static_cast<int>(c.outputs.size()) > 32) throw GameError(Errc::ArityTooLarge, "tabulate_circuit");
  std::vector<std::uint32_t> table(std::size_t{1} << m);
  for (std::uint32_t w = 0; w < table.size(); ++w)
    table[w] = static_cast<std::uint32_t>(circuit_eval(c, BitVector(m, w)).bits());
  return BoolFunction(m, static_cast<int>(c.outputs.size()), std::move(table));
}

namespace {

std::string fresh_id(std::set<std::string>& used, std::string base) {
  while (used.count(base)) base += "'";
  used.insert(base);
  return base;
}

}  // namespace

GraphGameForm circuit_to_ggf(const MonotoneCircuit& c) {
  validate_circuit(c);
  int n = static_cast<int>(c.gates.size());
  std::set<std::string> used(c.ids.begin(), c.ids.end());

  RawArena raw;
  std::map<std::string, int> prio;  // id -> priority, default 1
  std::vector<std::string> input_leaf(c.input_count);

  for (int i = 0; i < n; ++i) {
    const auto& g = c.gates[i];
    switch (g.kind) {
      case MonotoneCircuit::GateKind::Or:
        raw.vertices.push_back({c.ids[i], VertexKind::Player1, 0});
        for (int ch : g.children) raw.edges.push_back({c.ids[i], c.ids[ch], EdgeColor::Plain});
        break;
      case MonotoneCircuit::GateKind::And:
        raw.vertices.push_back({c.ids[i], VertexKind::Player2, 0});
        for (int ch : g.children) raw.edges.push_back({c.ids[i], c.ids[ch], EdgeColor::Plain});
        break;
      case MonotoneCircuit::GateKind::Input:
        raw.vertices.push_back({c.ids[i], VertexKind::Leaf, 0});
        input_leaf[g.input - 1] = c.ids[i];
        break;
      case MonotoneCircuit::GateKind::Const:
        raw.vertices.push_back({c.ids[i], VertexKind::Leaf, 0});
        prio[c.ids[i]] = g.value ? 2 : 1;
        break;
    }
  }

  // leaves for ignored inputs, unreachable but designated
  for (int k = 0; k < c.input_count; ++k) {
    if (!input_leaf[k].empty()) continue;
    input_leaf[k] = fresh_id(used, "in" + std::to_string(k + 1));
    raw.vertices.push_back({input_leaf[k], VertexKind::Leaf, 0});
  }

  // one relay per output slot keeps sources distinct and off the input leaves
  std::vector<std::string> relays;
  for (size_t t = 0; t < c.outputs.size(); ++t) {
    std::string rid = fresh_id(used, "out" + std::to_string(t + 1));
    raw.vertices.push_back({rid, VertexKind::Player1, 0});
    raw.edges.push_back({rid, c.ids[c.outputs[t]], EdgeColor::Plain});
    relays.push_back(rid);
  }

  Arena arena = validate_arena(raw);
  std::vector<int> prios(arena.vertex_count(), 1);
  for (const auto& [id, p] : prio) prios[arena.index_of(id)] = p;

  std::vector<int> inputs, outputs;
  for (const std::string& id : input_leaf) inputs.push_back(arena.index_of(id));
  for (const std::string& id : relays) outputs.push_back(arena.index_of(id));
  return make_ggf(ParamGame{std::move(arena), ParityCondition(std::move(prios))}, {}, std::move(inputs),
                  std::move(outputs));
}

namespace {

// Shared builder state for ggf_to_circuit.
struct Extraction {
  const GraphGameForm* g = nullptr;
  MonotoneCircuit circuit;
  std::vector<int> input_gate;  // per designated input, -1 until referenced
  int const_gate[2] = {-1, -1};
  int next_node = 0;
  std::map<int, int> designated;  // leaf vertex -> input slot

  int input_ref(int slot) {
    if (input_gate[slot] < 0) {
      circuit.gates.push_back({MonotoneCircuit::GateKind::Input, {}, slot + 1, false});
      circuit.ids.push_back("i" + std::to_string(slot + 1));
      input_gate[slot] = static_cast<int>(circuit.gates.size()) - 1;
    }
    return input_gate[slot];
  }

  int const_ref(bool b) {
    if (const_gate[b] < 0) {
      circuit.gates.push_back({MonotoneCircuit::GateKind::Const, {}, 0, b});
      circuit.ids.push_back(b ? "c1" : "c0");
      const_gate[b] = static_cast<int>(circuit.gates.size()) - 1;
    }
    return const_gate[b];
  }

  // gate index, or -1 with the constant in `cval`
  struct Node {
    int gate = -1;
    bool cval = false;
  };

  Node build(int v, std::vector<bool>& on_path) {
    const Arena& a = g->game.arena;
    if (a.is_leaf(v)) {
      auto it = designated.find(v);
      if (it != designated.end()) return {input_ref(it->second), false};
      return {-1, g->game.condition.priority(v) == 2};
    }
    if (on_path[v]) return {-1, false};  // repeating an ancestor loses a reachability game
    bool p1 = a.kind(v) == VertexKind::Player1;
    on_path[v] = true;
    std::vector<int> kids;
    bool decided = false;
    for (int u : a.plain_successors(v)) {
      Node r = build(u, on_path);
      if (r.gate < 0) {
        if (r.cval == p1) {  // winning edge for the owner settles the vertex
          decided = true;
          break;
        }
        continue;  // edge to a useless constant is dropped
      }
      kids.push_back(r.gate);
    }
    on_path[v] = false;
    if (decided) return {-1, p1};
    if (kids.empty()) return {-1, !p1};
    circuit.gates.push_back({p1 ? MonotoneCircuit::GateKind::Or : MonotoneCircuit::GateKind::And,
                             std::move(kids), 0, false});
    circuit.ids.push_back("n" + std::to_string(next_node++));
    return {static_cast<int>(circuit.gates.size()) - 1, false};
  }
};

}  // namespace

MonotoneCircuit ggf_to_circuit(const GraphGameForm& g) {
  const Arena& a = g.game.arena;
  if (a.counter_count() != 0)
    throw GameError(Errc::HasCounters, "circuit extraction needs a counter-free game");
  for (int v = 0; v < a.vertex_count(); ++v) {
    int p = g.game.condition.priority(v);
    if (p != 1 && p != 2)
      throw GameError(Errc::NotReachability, "priorities must be 1 with 2 on target leaves");
    if (p == 2 && !a.is_leaf(v))
      throw GameError(Errc::NotReachability, "priority 2 on a non-leaf vertex");
  }

  Extraction ex;
  ex.g = &g;
  ex.circuit.input_count = static_cast<int>(g.inputs.size());
  ex.input_gate.assign(g.inputs.size(), -1);
  for (size_t i = 0; i < g.inputs.size(); ++i) ex.designated[g.inputs[i]] = static_cast<int>(i);

  std::vector<bool> on_path(a.vertex_count(), false);
  for (int s : g.outputs) {
    Extraction::Node r = ex.build(s, on_path);
    ex.circuit.outputs.push_back(r.gate >= 0 ? r.gate : ex.const_ref(r.cval));
  }
  validate_circuit(ex.circuit);
  return std::move(ex.circuit);
}

int circuit_depth(const MonotoneCircuit& c) {
  int n = static_cast<int>(c.gates.size());
  std::vector<int> depth(n, -1);
  // gates are acyclic; resolve with a stack
  for (int root = 0; root < n; ++root) {
    if (depth[root] >= 0) continue;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      if (depth[v] >= 0) {
        stack.pop_back();
        continue;
      }
      const auto& g = c.gates[v];
      if (g.children.empty()) {
        depth[v] = 0;
        stack.pop_back();
        continue;
      }
      bool ready = true;
      int best = 0;
      for (int ch : g.children) {
        if (depth[ch] < 0) {
          stack.push_back(ch);
          ready = false;
        } else {
          best = std::max(best, depth[ch]);
        }
      }
      if (ready) {
        depth[v] = best + 1;
        stack.pop_back();
      }
    }
  }
  int out = 0;
  for (int o : c.outputs) out = std::max(out, depth[o]);
  return out;
}

GraphGameForm lfp_ggf(const GraphGameForm& g, int x_arity) {
  int m = static_cast<int>(g.inputs.size());
  int n = static_cast<int>(g.outputs.size());
  if (m != n) throw GameError(Errc::ArityMismatch, "lfp_ggf needs matching input and output arity");
  if (x_arity < 0 || x_arity > m) throw GameError(Errc::ArityMismatch, "lfp_ggf: bad x block size");

  const Arena& a = g.game.arena;
  RawArena raw = a.to_raw();
  std::vector<int> prio(g.game.condition.priorities().begin(), g.game.condition.priorities().end());

  for (int i = 0; i < x_arity; ++i) {
    int leaf = g.inputs[i];
    const std::string& lid = a.id(leaf);
    for (auto& v : raw.vertices)
      if (v.id == lid) v.kind = VertexKind::Player1;
    std::erase_if(raw.edges, [&](const RawEdge& e) { return e.from == lid; });
    raw.edges.push_back({lid, a.id(g.outputs[i]), EdgeColor::Plain});
    prio[leaf] = 1;  // passing through the rewired leaf must not help Player 1
  }

  Arena arena = validate_arena(raw);  // vertex set unchanged, indices stay put
  std::vector<int> inputs(g.inputs.begin() + x_arity, g.inputs.end());
  std::vector<int> outputs(g.outputs.begin(), g.outputs.begin() + x_arity);
  return make_ggf(ParamGame{std::move(arena), ParityCondition(std::move(prio))}, g.fixed_params,
                  std::move(inputs), std::move(outputs));
}

BoolFunction lfp_bruteforce(const BoolFunction& f, int x_arity) {
  int m = f.input_arity();
  if (m != f.output_arity()) throw GameError(Errc::ArityMismatch, "lfp_bruteforce needs m = n");
  if (x_arity < 0 || x_arity > m) throw GameError(Errc::ArityMismatch, "lfp_bruteforce: bad x block size");
  if (!is_monotone(f)) throw GameError(Errc::NotMonotone, "least fixed points need a monotone function");

  int y_arity = m - x_arity;
  std::uint32_t x_mask = x_arity == 32 ? ~0u : (1u << x_arity) - 1;
  std::vector<std::uint32_t> table(std::size_t{1} << y_arity);
  for (std::uint32_t y = 0; y < table.size(); ++y) {
    std::uint32_t x = 0;
    for (int it = 0; it <= x_arity; ++it) {
      std::uint32_t next = f.row((y << x_arity) | x) & x_mask;
      if (next == x) break;
      x = next;
    }
    table[y] = x;
  }
  return BoolFunction(y_arity, x_arity, std::move(table));
}

int repetition_number(const BoolFunction& f) {
  int m = f.input_arity();
  if (m != f.output_arity()) throw GameError(Errc::ArityMismatch, "repetition number needs m = n");
  std::size_t size = std::size_t{1} << m;

  // functional graph analysis: rho length = tail + cycle
  std::vector<int> cycle_len(size, 0);  // > 0 on cycle vertices
  std::vector<int> color(size, 0);
  for (std::uint32_t w = 0; w < size; ++w) {
    if (color[w]) continue;
    std::vector<std::uint32_t> path;
    std::uint32_t v = w;
    while (color[v] == 0) {
      color[v] = 1;
      path.push_back(v);
      v = f.row(v);
    }
    if (color[v] == 1) {  // fresh cycle found along this walk
      auto it = std::find(path.begin(), path.end(), v);
      int len = static_cast<int>(path.end() - it);
      for (auto p = it; p != path.end(); ++p) cycle_len[*p] = len;
    }
    for (std::uint32_t p : path) color[p] = 2;
  }

  std::vector<int> rho(size, -1);
  int best = 0;
  for (std::uint32_t w = 0; w < size; ++w) {
    // resolve the tail iteratively
    std::vector<std::uint32_t> path;
    std::uint32_t v = w;
    while (rho[v] < 0 && cycle_len[v] == 0) {
      path.push_back(v);
      v = f.row(v);
    }
    int base = rho[v] >= 0 ? rho[v] : cycle_len[v];
    for (auto it = path.rbegin(); it != path.rend(); ++it) rho[*it] = ++base;
    best = std::max(best, rho[w] >= 0 ? rho[w] : cycle_len[w]);
  }
  return best;
}

GraphGameForm induced_ggf(const ParamGame& pg, int counter_class, const ParameterVector& fixed) {
  const Arena& a = pg.arena;
  int total = a.counter_count();
  if (counter_class < 1 || counter_class > total)
    throw GameError(Errc::EmptyCounterClass, "no such counter class");
  auto members = a.class_members(counter_class);
  if (members.empty()) throw GameError(Errc::EmptyCounterClass, "counter class has no vertices");
  if (fixed.size() != static_cast<size_t>(total - 1))
    throw GameError(Errc::ArityMismatch, "fixed values must cover the other counters");

  std::set<std::string> used;
  for (int v = 0; v < a.vertex_count(); ++v) used.insert(a.id(v));
  std::map<int, std::string> in_id, out_id;
  for (int v : members) {
    in_id[v] = fresh_id(used, a.id(v) + "^in");
    out_id[v] = fresh_id(used, a.id(v) + "^out");
  }
  auto redirect = [&](int u) { return out_id.count(u) ? out_id[u] : a.id(u); };

  RawArena raw;
  std::vector<std::pair<std::string, int>> prios;
  for (int v = 0; v < a.vertex_count(); ++v) {
    int p = pg.condition.priority(v);
    if (out_id.count(v)) {
      raw.vertices.push_back({in_id[v], VertexKind::Player1, 0});
      raw.vertices.push_back({out_id[v], VertexKind::Leaf, 0});
      raw.edges.push_back({in_id[v], redirect(a.green_target(v)), EdgeColor::Plain});
      prios.emplace_back(in_id[v], p);
      prios.emplace_back(out_id[v], p);
      continue;
    }
    int cls = a.counter_class(v);
    if (cls > counter_class) --cls;
    raw.vertices.push_back({a.id(v), a.kind(v), cls});
    prios.emplace_back(a.id(v), p);
    switch (a.kind(v)) {
      case VertexKind::Counter:
        raw.edges.push_back({a.id(v), redirect(a.red_target(v)), EdgeColor::Red});
        raw.edges.push_back({a.id(v), redirect(a.green_target(v)), EdgeColor::Green});
        break;
      case VertexKind::Player1:
      case VertexKind::Player2:
        for (int u : a.plain_successors(v)) raw.edges.push_back({a.id(v), redirect(u), EdgeColor::Plain});
        break;
      case VertexKind::Leaf:
        break;
    }
  }

  Arena arena = validate_arena(raw);
  std::vector<int> prio(arena.vertex_count(), 0);
  for (const auto& [id, p] : prios) prio[arena.index_of(id)] = p;

  std::vector<int> inputs, outputs;
  for (int v : members) {
    inputs.push_back(arena.index_of(out_id[v]));
    outputs.push_back(arena.index_of(in_id[v]));
  }
  return make_ggf(ParamGame{std::move(arena), ParityCondition(std::move(prio))}, fixed, std::move(inputs),
                  std::move(outputs));
}

}  // namespace pgame
