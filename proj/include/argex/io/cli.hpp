#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace argex::io {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitPreconditionError = 2;

/// Runs one command-line query. `args` excludes the program name. Returns
/// kExitOk, kExitInputError (bad flags, unreadable or malformed input,
/// unknown names) or kExitPreconditionError (precondition or applicability
/// failure; the report is still written to `out`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace argex::io
