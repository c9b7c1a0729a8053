#include "pgame/format.hpp"

#include <map>
#include <set>
#include <sstream>

namespace pgame {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> tokens;
  std::string t;
  while (is >> t) tokens.push_back(t);
  return tokens;
}

bool parse_nat(const std::string& s, std::uint64_t& out) {
  if (s.empty()) return false;
  out = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return true;
}

}  // namespace

ArenaDocument parse_arena(std::string_view text) {
  RawArena raw;
  std::map<std::string, int> prio;  // explicit priorities, default 1
  std::map<std::string, VertexKind> kind_of;
  std::optional<std::string> start_id;
  int start_line = 0;
  std::vector<std::string> input_ids, output_ids;
  struct PendingEdge {
    RawEdge edge;
    int line;
    bool colored;
  };
  std::vector<PendingEdge> edges;

  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.front() == '#') continue;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] == "vertex") {
      if (tok.size() < 3) throw ParseError(lineno, "vertex needs an id and an owner");
      const std::string& id = tok[1];
      if (kind_of.count(id)) throw ParseError(lineno, "vertex " + id + " declared twice");
      RawVertex v;
      v.id = id;
      const std::string& owner = tok[2];
      if (owner == "p1")
        v.kind = VertexKind::Player1;
      else if (owner == "p2")
        v.kind = VertexKind::Player2;
      else if (owner == "leaf")
        v.kind = VertexKind::Leaf;
      else if (owner.size() > 1 && owner[0] == 'c') {
        std::uint64_t cls;
        if (!parse_nat(owner.substr(1), cls) || cls < 1)
          throw ParseError(lineno, "bad counter class in " + owner);
        v.kind = VertexKind::Counter;
        v.counter_class = static_cast<int>(cls);
      } else {
        throw ParseError(lineno, "unknown owner " + owner + " (expected p1, p2, c<j> or leaf)");
      }
      for (size_t i = 3; i < tok.size(); ++i) {
        if (tok[i].rfind("prio=", 0) == 0) {
          std::uint64_t p;
          if (!parse_nat(tok[i].substr(5), p)) throw ParseError(lineno, "bad priority in " + tok[i]);
          prio[id] = static_cast<int>(p);
        } else {
          throw ParseError(lineno, "unexpected token " + tok[i]);
        }
      }
      kind_of[id] = v.kind;
      raw.vertices.push_back(std::move(v));
    } else if (tok[0] == "edge") {
      if (tok.size() < 3 || tok.size() > 4) throw ParseError(lineno, "edge needs two endpoints");
      RawEdge e{tok[1], tok[2], EdgeColor::Plain};
      bool colored = false;
      if (tok.size() == 4) {
        if (tok[3] == "red")
          e.color = EdgeColor::Red;
        else if (tok[3] == "green")
          e.color = EdgeColor::Green;
        else
          throw ParseError(lineno, "unknown edge color " + tok[3]);
        colored = true;
      }
      edges.push_back({std::move(e), lineno, colored});
    } else if (tok[0] == "start") {
      if (tok.size() != 2) throw ParseError(lineno, "start needs one vertex id");
      if (start_id) throw ParseError(lineno, "start declared twice");
      start_id = tok[1];
      start_line = lineno;
    } else if (tok[0] == "input") {
      if (tok.size() != 2) throw ParseError(lineno, "input needs one vertex id");
      input_ids.push_back(tok[1]);
    } else if (tok[0] == "output") {
      if (tok.size() != 2) throw ParseError(lineno, "output needs one vertex id");
      output_ids.push_back(tok[1]);
    } else {
      throw ParseError(lineno, "unknown directive " + tok[0]);
    }
  }

  if (raw.vertices.empty()) throw ParseError(lineno, "no vertices declared");

  // colors are mandatory exactly on counter-vertex edges
  for (const PendingEdge& pe : edges) {
    auto it = kind_of.find(pe.edge.from);
    if (it == kind_of.end()) continue;  // left to validation: UnknownVertex
    bool counter = it->second == VertexKind::Counter;
    if (counter && !pe.colored)
      throw ParseError(pe.line, "edge from counter vertex " + pe.edge.from + " needs red or green");
    if (!counter && pe.colored)
      throw ParseError(pe.line, "color on an edge from non-counter vertex " + pe.edge.from);
    raw.edges.push_back(pe.edge);
  }
  for (const PendingEdge& pe : edges)
    if (!kind_of.count(pe.edge.from)) raw.edges.push_back(pe.edge);

  ArenaDocument doc;
  doc.arena = validate_arena(raw);

  std::vector<int> prios(doc.arena.vertex_count(), 1);
  for (const auto& [id, p] : prio) prios[doc.arena.index_of(id)] = p;
  doc.condition = ParityCondition(std::move(prios));

  if (start_id) {
    int s = doc.arena.index_of(*start_id);
    if (s < 0) throw ParseError(start_line, "start vertex " + *start_id + " is not declared");
    doc.start = s;
  }
  std::set<std::string> seen_pins;
  for (const std::string& id : input_ids) {
    int v = doc.arena.index_of(id);
    if (v < 0) throw ParseError(lineno, "input vertex " + id + " is not declared");
    if (!seen_pins.insert("i" + id).second) throw ParseError(lineno, "duplicate input " + id);
    doc.inputs.push_back(v);
  }
  for (const std::string& id : output_ids) {
    int v = doc.arena.index_of(id);
    if (v < 0) throw ParseError(lineno, "output vertex " + id + " is not declared");
    if (!seen_pins.insert("o" + id).second) throw ParseError(lineno, "duplicate output " + id);
    doc.outputs.push_back(v);
  }
  return doc;
}

std::string print_arena(const ArenaDocument& doc) {
  const Arena& a = doc.arena;
  std::ostringstream os;
  for (int v = 0; v < a.vertex_count(); ++v) {
    os << "vertex " << a.id(v) << ' ';
    switch (a.kind(v)) {
      case VertexKind::Player1: os << "p1"; break;
      case VertexKind::Player2: os << "p2"; break;
      case VertexKind::Counter: os << 'c' << a.counter_class(v); break;
      case VertexKind::Leaf: os << "leaf"; break;
    }
    if (doc.condition.priority(v) != 1) os << " prio=" << doc.condition.priority(v);
    os << '\n';
  }
  for (int v = 0; v < a.vertex_count(); ++v) {
    switch (a.kind(v)) {
      case VertexKind::Player1:
      case VertexKind::Player2:
        for (int u : a.plain_successors(v)) os << "edge " << a.id(v) << ' ' << a.id(u) << '\n';
        break;
      case VertexKind::Counter:
        os << "edge " << a.id(v) << ' ' << a.id(a.green_target(v)) << " green\n";
        os << "edge " << a.id(v) << ' ' << a.id(a.red_target(v)) << " red\n";
        break;
      case VertexKind::Leaf:
        break;  // self-loop is implicit
    }
  }
  if (doc.start) os << "start " << a.id(*doc.start) << '\n';
  for (int v : doc.inputs) os << "input " << a.id(v) << '\n';
  for (int v : doc.outputs) os << "output " << a.id(v) << '\n';
  return os.str();
}

MonotoneCircuit parse_circuit(std::string_view text) {
  MonotoneCircuit c;
  std::map<std::string, int> index;
  struct PendingGate {
    std::string id;
    std::string op;
    std::vector<std::string> args;
    int line;
  };
  std::vector<PendingGate> pending;
  std::vector<std::string> output_ids;
  bool saw_outputs = false;
  int declared_inputs = -1;

  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.front() == '#') continue;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] == "inputs") {
      if (tok.size() != 2) throw ParseError(lineno, "inputs needs one number");
      std::uint64_t m;
      if (!parse_nat(tok[1], m)) throw ParseError(lineno, "bad input count");
      declared_inputs = static_cast<int>(m);
    } else if (tok[0] == "gate") {
      if (tok.size() < 3) throw ParseError(lineno, "gate needs an id and a kind");
      PendingGate g{tok[1], tok[2], {tok.begin() + 3, tok.end()}, lineno};
      if (index.count(g.id)) throw ParseError(lineno, "gate " + g.id + " declared twice");
      index.emplace(g.id, static_cast<int>(pending.size()));
      pending.push_back(std::move(g));
    } else if (tok[0] == "outputs") {
      if (saw_outputs) throw ParseError(lineno, "outputs declared twice");
      saw_outputs = true;
      output_ids.assign(tok.begin() + 1, tok.end());
    } else {
      throw ParseError(lineno, "unknown directive " + tok[0]);
    }
  }
  if (!saw_outputs) throw ParseError(lineno, "missing outputs line");

  int max_input = 0;
  for (const PendingGate& g : pending) {
    MonotoneCircuit::Gate gate;
    if (g.op == "AND" || g.op == "OR") {
      gate.kind = g.op == "AND" ? MonotoneCircuit::GateKind::And : MonotoneCircuit::GateKind::Or;
      if (g.args.empty()) throw ParseError(g.line, "gate " + g.id + " needs at least one child");
      for (const std::string& ch : g.args) {
        auto it = index.find(ch);
        if (it == index.end()) throw ParseError(g.line, "unknown gate " + ch);
        gate.children.push_back(it->second);
      }
    } else if (g.op == "INPUT") {
      if (g.args.size() != 1) throw ParseError(g.line, "INPUT needs one index");
      std::uint64_t k;
      if (!parse_nat(g.args[0], k) || k < 1) throw ParseError(g.line, "bad input index");
      gate.kind = MonotoneCircuit::GateKind::Input;
      gate.input = static_cast<int>(k);
      max_input = std::max(max_input, gate.input);
    } else if (g.op == "CONST") {
      if (g.args.size() != 1 || (g.args[0] != "0" && g.args[0] != "1"))
        throw ParseError(g.line, "CONST needs 0 or 1");
      gate.kind = MonotoneCircuit::GateKind::Const;
      gate.value = g.args[0] == "1";
    } else {
      throw ParseError(g.line, "unknown gate kind " + g.op);
    }
    c.gates.push_back(std::move(gate));
    c.ids.push_back(g.id);
  }
  for (const std::string& id : output_ids) {
    auto it = index.find(id);
    if (it == index.end()) throw ParseError(lineno, "unknown output gate " + id);
    c.outputs.push_back(it->second);
  }
  c.input_count = declared_inputs >= 0 ? declared_inputs : max_input;
  try {
    validate_circuit(c);
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
  return c;
}

std::string print_circuit(const MonotoneCircuit& c) {
  std::ostringstream os;
  os << "inputs " << c.input_count << '\n';
  for (size_t i = 0; i < c.gates.size(); ++i) {
    const auto& g = c.gates[i];
    os << "gate " << c.ids[i] << ' ';
    switch (g.kind) {
      case MonotoneCircuit::GateKind::And:
      case MonotoneCircuit::GateKind::Or:
        os << (g.kind == MonotoneCircuit::GateKind::And ? "AND" : "OR");
        for (int ch : g.children) os << ' ' << c.ids[ch];
        break;
      case MonotoneCircuit::GateKind::Input: os << "INPUT " << g.input; break;
      case MonotoneCircuit::GateKind::Const: os << "CONST " << (g.value ? 1 : 0); break;
    }
    os << '\n';
  }
  os << "outputs";
  for (int o : c.outputs) os << ' ' << c.ids[o];
  os << '\n';
  return os.str();
}

}  // namespace pgame
