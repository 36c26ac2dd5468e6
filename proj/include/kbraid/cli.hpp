#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kbraid {

enum ExitCode : int {
  exit_ok = 0,
  exit_syntax = 1,
  exit_invalid_map = 2,
  exit_split_map = 3,
  exit_cross_check = 4,
};

// Runs one command line (without the program name).  Reports go to `out`,
// diagnostics to `err`.  Subcommands:
//
//   normalize <word>          mul <word> <word>          inv <word>
//   check <mapfile>           classify <mapfile>
//   lift <mapfile>            nielsen <mapfile>
//   fixtures <b0-even|b0-odd> [ranges] [--out DIR]
//   sweep [--family all|b0-even|b0-odd] [ranges]
//
// Ranges are --x, --y, --z, --l, each "lo:hi" or a single integer; even z
// values are skipped.  --format json|table picks the output style; json is
// the default except for sweep.
int run_command(std::vector<std::string> const& args, std::ostream& out,
                std::ostream& err);

}  // namespace kbraid
