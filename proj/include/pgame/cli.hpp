#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgame {

// Runs one CLI invocation (args without the program name) and writes the
// report to `out`, diagnostics to `err`. Exit status: 0 for a Player-1
// favourable answer or plain success, 1 for Player 2 / false / no witness,
// 2 for usage or validation errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgame
