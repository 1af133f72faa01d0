#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace linrel {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,
  kExitPrecondition = 3,
  kExitConsistency = 4,
};

/// FNV-1a, 64 bit. Used as the input digest in reports.
std::uint64_t fnv1a64(std::string_view bytes);

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out` as JSON, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace linrel
