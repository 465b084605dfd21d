#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fforge::cli {

// Exit statuses of the command line front end.
inline constexpr int kFeasible = 0;
inline constexpr int kInfeasible = 1;
inline constexpr int kUsage = 2;

// Runs one command; `args` excludes the program name. Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fforge::cli
