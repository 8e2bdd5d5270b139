#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace doubler::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 2;
inline constexpr int kExitUsage = 64;

/// Runs one CLI invocation. `args` excludes the program name. A successful
/// command writes a single JSON document and a newline to `out`; a domain
/// error writes {"code":...,"message":...} to `out` and returns 2; usage
/// errors go to `err` and return 64.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace doubler::cli
