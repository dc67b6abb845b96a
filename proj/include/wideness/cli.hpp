#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wideness {

/// Exit codes: 0 success / valid, 1 failure / invalid, 2 usage or input error.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name. Reports go to --out or `out`;
/// diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv);

}  // namespace wideness
