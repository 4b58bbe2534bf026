#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgcanon {

// Runs the command-line tool: args are the arguments after the program name.
// Reads graphs from `in` when a file argument is "-", writes results to
// `out` and error messages to `err`.  Returns the process exit code:
// 0 on success, 1 when `iso` finds no isomorphism, 2 on parse or validation
// errors.  Exposed as a function so tests can drive the tool in-process.
int cli_run(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace sgcanon
