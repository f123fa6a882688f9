#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace densub::cli {

enum ExitCode : int {
  kOk = 0,
  kMalformedInput = 1,
  kInfeasible = 2,
  kCapacity = 3,
  kContract = 4,
};

// Runs one command. `args` excludes the program name. Reads the graph from
// `in` when no --input is given; the report goes to `out`, diagnostics to
// `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace densub::cli
