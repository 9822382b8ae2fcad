#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splitalg::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_violations = 1;
inline constexpr int exit_usage = 2;

/// Runs one command; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Recipes accepted by the construct subcommand.
const std::vector<std::string>& recipes();

} // namespace splitalg::cli
