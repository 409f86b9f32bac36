#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jcf::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,  // "not similar" / "invalid"
  kUsage = 2,
  kIrrationalSpectrum = 3,
  kShape = 4,
};

/// Runs the command line `argv` (argv[0] is the program name). Results go
/// to `out` only on success; diagnostics go to `err`. `in` backs FILE = "-".
int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace jcf::cli
