#ifndef ELC_TOOLS_CLI_HPP_
#define ELC_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace elc::cli {

// Runs one elcgraph invocation. args excludes the program name. Returns the
// process exit code: 0 on success, 1 on invalid input or a failed operation,
// 2 on a usage error. Failures print a single "error: <kind>: <message>" line
// to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace elc::cli

#endif  // ELC_TOOLS_CLI_HPP_
