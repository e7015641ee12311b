#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyban::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,   // I/O, parse and syntax errors; failed selftest
  kDomainError = 2,  // NotSymmetric, NotEpsCommutative, ...
  kUsage = 64,
  kInternal = 70,   // a broken internal invariant
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs the bundled invariant checks, one "check <name> = pass|fail" line
/// each. Returns true when all pass.
bool selftest(std::ostream& out);

}  // namespace polyban::cli
