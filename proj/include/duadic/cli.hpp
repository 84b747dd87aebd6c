#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace duadic::cli {

/// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUsage = 2;

/// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace duadic::cli
