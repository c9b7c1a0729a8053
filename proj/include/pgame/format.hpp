#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgame/core.hpp"
#include "pgame/gameform.hpp"

namespace pgame {

// Parsed arena file: the game itself plus the optional start vertex and the
// optional designated input/output pins used by the game-form commands.
struct ArenaDocument {
  Arena arena;
  ParityCondition condition;
  std::optional<int> start;
  std::vector<int> inputs;
  std::vector<int> outputs;
};

// Line-oriented grammar:
//   # comment
//   vertex <id> p1|p2|c<j>|leaf [prio=<nat>]
//   edge <from> <to> [red|green]
//   start <id>
//   input <id>
//   output <id>
// Leaf self-loops are implicit, the default priority is 1, and colors are
// mandatory exactly on counter-vertex edges. Throws ParseError with the line
// number, then ValidationError for structural violations.
ArenaDocument parse_arena(std::string_view text);

std::string print_arena(const ArenaDocument& doc);

// Circuit exchange format:
//   inputs <m>            (optional; defaults to the largest INPUT index)
//   gate <id> AND|OR <child-ids...>
//   gate <id> INPUT <k>
//   gate <id> CONST 0|1
//   outputs <ids...>
MonotoneCircuit parse_circuit(std::string_view text);

std::string print_circuit(const MonotoneCircuit& c);

}  // namespace pgame
