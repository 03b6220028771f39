#ifndef MAHLERLAB_TOOLS_CLI_HPP
#define MAHLERLAB_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mahlerlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0, 1 (computation error) or 2 (usage).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mahlerlab::cli

#endif  // MAHLERLAB_TOOLS_CLI_HPP
