#include "pgame/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "pgame/format.hpp"
#include "pgame/gallery.hpp"
#include "pgame/param.hpp"
#include "pgame/unfold.hpp"

namespace pgame {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ParameterVector parse_csv(const std::string& s) {
  ParameterVector out;
  if (s.empty()) return out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) {
    std::uint64_t v = 0;
    if (item.empty()) throw UsageError("empty entry in value list");
    for (char c : item) {
      if (c < '0' || c > '9') throw UsageError("bad natural number " + item);
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    out.push_back(v);
  }
  return out;
}

// flags: name -> value; positional arguments collected in order
struct Args {
  std::vector<std::string> positional;
  std::map<std::string, std::string> flags;

  std::optional<std::string> flag(const std::string& name) const {
    auto it = flags.find(name);
    if (it == flags.end()) return std::nullopt;
    return it->second;
  }
};

Args collect(const std::vector<std::string>& argv, size_t from) {
  Args a;
  for (size_t i = from; i < argv.size(); ++i) {
    const std::string& s = argv[i];
    if (s.rfind("--", 0) == 0) {
      if (i + 1 >= argv.size()) throw UsageError("flag " + s + " needs a value");
      a.flags[s.substr(2)] = argv[++i];
    } else {
      a.positional.push_back(s);
    }
  }
  return a;
}

ArenaDocument load_document(const Args& a) {
  if (a.positional.size() != 1) throw UsageError("expected exactly one arena file");
  return parse_arena(read_file(a.positional[0]));
}

int require_start(const ArenaDocument& doc) {
  if (!doc.start) throw UsageError("the arena file declares no start vertex");
  return *doc.start;
}

std::string format_vector(const ParameterVector& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::vector<std::pair<Quantifier, int>> parse_prefix(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  std::vector<std::pair<Quantifier, int>> prefix;
  while (is >> tok) {
    if (tok.size() < 2 || (tok[0] != 'A' && tok[0] != 'E'))
      throw UsageError("quantifier " + tok + " must look like A1 or E2");
    int cls = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9') throw UsageError("bad counter index in " + tok);
      cls = cls * 10 + (tok[i] - '0');
    }
    prefix.emplace_back(tok[0] == 'A' ? Quantifier::ForAll : Quantifier::Exists, cls);
  }
  if (prefix.empty()) throw UsageError("empty quantifier prefix");
  return prefix;
}

int cmd_solve(const Args& a, std::ostream& out) {
  ArenaDocument doc = load_document(a);
  int start = require_start(doc);
  ParameterVector params;
  if (auto p = a.flag("params")) params = parse_csv(*p);
  if (params.size() != static_cast<size_t>(doc.arena.counter_count()))
    throw UsageError("--params must list one value per counter (" +
                     std::to_string(doc.arena.counter_count()) + " expected)");
  bool p1 = wins_with_params(ParamGame{doc.arena, doc.condition}, params, start);
  out << (p1 ? "P1" : "P2") << '\n';
  return p1 ? 0 : 1;
}

int cmd_exists(const Args& a, std::ostream& out) {
  ArenaDocument doc = load_document(a);
  int start = require_start(doc);
  auto witness = exists_winning_params(ParamGame{doc.arena, doc.condition}, start);
  if (!witness) {
    out << "none\n";
    return 1;
  }
  out << format_vector(*witness) << '\n';
  return 0;
}

int cmd_query(const Args& a, std::ostream& out) {
  ArenaDocument doc = load_document(a);
  ParamQuery q;
  q.game = ParamGame{doc.arena, doc.condition};
  q.start = require_start(doc);
  auto prefix = a.flag("prefix");
  if (!prefix) throw UsageError("query needs --prefix \"A1 E2 ...\"");
  q.prefix = parse_prefix(*prefix);
  if (auto b = a.flag("bounds")) q.bound_override = parse_csv(*b);
  QueryResult r = eval_query(q);
  out << (r.value ? "true" : "false") << '\n';
  if (!r.assignment.empty()) {
    for (size_t i = 0; i < r.assignment.size(); ++i) {
      if (i) out << ' ';
      out << 'n' << r.assignment[i].first << '=' << r.assignment[i].second;
    }
    out << '\n';
  }
  return r.value ? 0 : 1;
}

int cmd_profiles(const Args& a, std::ostream& out) {
  ArenaDocument doc = load_document(a);
  int start = require_start(doc);
  auto counter = a.flag("counter");
  if (!counter) throw UsageError("profiles needs --counter <j>");
  ParameterVector jv = parse_csv(*counter);
  if (jv.size() != 1) throw UsageError("--counter expects one class index");
  int j = static_cast<int>(jv[0]);
  if (j < 1 || j > doc.arena.counter_count()) throw UsageError("no such counter class");
  ParameterVector fixed;
  if (auto f = a.flag("fixed")) fixed = parse_csv(*f);
  if (fixed.size() != static_cast<size_t>(doc.arena.counter_count() - 1))
    throw UsageError("--fixed must list one value per other counter");
  ProfileTrajectory t = iterate_profiles(ParamGame{doc.arena, doc.condition}, start, j, fixed);
  out << "counter " << j << " vertices:";
  for (int v : doc.arena.class_members(j)) out << ' ' << doc.arena.id(v);
  out << '\n';
  for (size_t k = 0; k < t.profiles.size(); ++k)
    out << "profile[" << k << "] = " << t.profiles[k].str() << " start=" << (t.start_wins[k] ? "win" : "lose")
        << '\n';
  out << "preperiod = " << t.preperiod << '\n';
  out << "period = " << t.period << '\n';
  return 0;
}

int cmd_extract_circuit(const Args& a, std::ostream& out) {
  ArenaDocument doc = load_document(a);
  if (doc.outputs.empty() && doc.inputs.empty())
    throw UsageError("the arena file declares no input/output pins");
  ParameterVector fixed(doc.arena.counter_count(), 0);
  GraphGameForm g = make_ggf(ParamGame{doc.arena, doc.condition}, fixed, doc.inputs, doc.outputs);
  out << print_circuit(ggf_to_circuit(g));
  return 0;
}

int cmd_rn(const Args& a, std::ostream& out) {
  auto file = a.flag("circuit");
  if (!file) throw UsageError("rn needs --circuit <file>");
  MonotoneCircuit c = parse_circuit(read_file(*file));
  out << repetition_number(tabulate_circuit(c)) << '\n';
  return 0;
}

GadgetSpec swap_spec() {
  MonotoneCircuit c;
  c.input_count = 2;
  c.gates.push_back({MonotoneCircuit::GateKind::Input, {}, 1, false});
  c.gates.push_back({MonotoneCircuit::GateKind::Input, {}, 2, false});
  c.ids = {"i1", "i2"};
  c.outputs = {1, 0};  // swap
  GadgetSpec spec;
  spec.circuit = std::move(c);
  spec.w = BitVector::parse("01");
  spec.fw = BitVector::parse("10");
  return spec;
}

int cmd_example(const Args& a, std::ostream& out) {
  if (a.positional.size() != 1) throw UsageError("example needs one name");
  const std::string& name = a.positional[0];
  ArenaDocument doc;
  if (name.rfind("linear", 0) == 0 && name.size() > 6) {
    ParameterVector n = parse_csv(name.substr(6));
    if (n.size() != 1 || n[0] < 1 || n[0] > 64) throw UsageError("linear<N> needs N in 1..64");
    GameWithStart g = build_linear(static_cast<int>(n[0]));
    doc = {g.game.arena, g.game.condition, g.start, {}, {}};
  } else if (name == "helpme" || name == "helpme-param") {
    HelpmeGame g = build_helpme(name == "helpme-param");
    doc = {g.arena, g.payoff_at_least_1, g.start, {}, {}};
  } else if (name == "swap-gadget") {
    SpernerGadget g = sperner_gadget(swap_spec());
    doc = {g.game.arena, g.game.condition, g.start, {}, {}};
  } else {
    throw UsageError("unknown example " + name +
                     " (available: linear<N>, helpme, helpme-param, swap-gadget)");
  }
  out << print_arena(doc);
  return 0;
}

constexpr const char* kUsage =
    "usage: pgame <command> ...\n"
    "  solve <file> --params <csv>                 winner from the start vertex\n"
    "  exists <file>                               minimal winning parameter vector or none\n"
    "  query <file> --prefix \"A1 E2\" [--bounds <csv>]   quantified parameter question\n"
    "  profiles <file> --counter <j> [--fixed <csv>]     win-profile trajectory of one counter\n"
    "  extract-circuit <file>                      monotone circuit of a reachability game form\n"
    "  rn --circuit <file>                         repetition number of the circuit's function\n"
    "  example <name>                              print a built-in arena (linear<N>, helpme,\n"
    "                                              helpme-param, swap-gadget)\n";

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.empty()) throw UsageError("missing command");
    const std::string& cmd = args[0];
    Args a = collect(args, 1);
    if (cmd == "solve") return cmd_solve(a, out);
    if (cmd == "exists") return cmd_exists(a, out);
    if (cmd == "query") return cmd_query(a, out);
    if (cmd == "profiles") return cmd_profiles(a, out);
    if (cmd == "extract-circuit") return cmd_extract_circuit(a, out);
    if (cmd == "rn") return cmd_rn(a, out);
    if (cmd == "example") return cmd_example(a, out);
    if (cmd == "help" || cmd == "--help" || cmd == "-h") {
      out << kUsage;
      return 0;
    }
    throw UsageError("unknown command " + cmd);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << kUsage;
    return 2;
  } catch (const GameError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace pgame
