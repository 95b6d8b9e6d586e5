// In-process entry point for the paramsort command-line tool.
//
// Exit codes: 0 success, 1 runtime or data error, 2 usage error.

#ifndef PARAMSORT_TOOLS_CLI_HPP
#define PARAMSORT_TOOLS_CLI_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace paramsort::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a p grid: "a..b:step" (inclusive, stepped in exact decimal units),
/// a comma list "0.1,0.25,0.5", or a single value. Every value must lie in
/// (0, 1]; violations throw UsageError("p must be in (0,1], got ...").
std::vector<double> parse_p_grid(std::string_view text);

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paramsort::cli

#endif  // PARAMSORT_TOOLS_CLI_HPP
