#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thincode {

// Entry point behind the command-line binary. args holds everything after
// the program name. Returns 0 on success, 1 on a user error (bad flags,
// rejected specs, refused budgets), 2 when a verification command found a
// difference against its built-in reference.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thincode
