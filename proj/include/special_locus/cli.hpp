#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace special_locus {

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitPrecision = 3;
inline constexpr int kExitInternal = 4;

// Runs one subcommand; args exclude the program name. Reports go to out,
// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace special_locus
