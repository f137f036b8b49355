#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace modspace::cli {

/// Process exit codes.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUncharacterized = 2;
inline constexpr int kExitParse = 64;

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The invariant suite behind `modspace selftest`: partition residuals,
/// transform round trip, reconstruction and oracle spot checks.
nlohmann::json selftest_report();

}  // namespace modspace::cli
