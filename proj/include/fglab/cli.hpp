#ifndef FGLAB_CLI_HPP
#define FGLAB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fglab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFalse = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Documents go to
/// `out` (or --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fglab::cli

#endif  // FGLAB_CLI_HPP
