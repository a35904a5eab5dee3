#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace origami {

// Runs one command-line invocation against the given streams and returns the
// process exit code: 0 success, 2 invalid input, 3 certificate failure,
// 64 usage error, 70 internal error.  `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace origami
