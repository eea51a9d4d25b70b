#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace laurent_lab {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitInvalid = 2 };

/// Entry point for `laurent-lab classify|series|verify|census`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Census worker count from LAURENT_LAB_THREADS (unset: hardware default).
/// Throws InputError when the variable is set but not a positive integer.
unsigned census_threads_from_env();

/// "10", "2..4" or "2..10" with a separate step.
std::vector<int> parse_k_range(const std::string& text, int step);

}  // namespace laurent_lab
