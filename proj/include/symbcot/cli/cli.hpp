#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symbcot::cli {

// Exit codes shared by every subcommand.
inline constexpr int kSuccess = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kUsageError = 2;

// Runs `symbcot <args...>` (args exclude the program name) against the given
// streams; `in` backs "-" file arguments.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace symbcot::cli
