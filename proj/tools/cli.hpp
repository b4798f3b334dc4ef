#ifndef EULERPOLY_TOOLS_CLI_HPP
#define EULERPOLY_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace eulerpoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Exit code 0 iff every
/// requested verdict is true, 1 if a verdict failed, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerpoly::cli

#endif  // EULERPOLY_TOOLS_CLI_HPP
