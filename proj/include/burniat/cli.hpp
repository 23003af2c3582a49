#pragma once

// Command-line front end.
//
//   burniat [--json] [--trace] [--batch FILE] COMMAND ARGS...
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 internal
// inconsistency (including a table that does not regenerate and a failing
// self-test).

#include <ostream>
#include <string>
#include <vector>

namespace burniat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burniat::cli
