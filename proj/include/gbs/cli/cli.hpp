#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gbs {

enum ExitCode : int { exit_ok = 0, exit_unknown = 1, exit_input_error = 2, exit_not_separation_instance = 3 };

/// Entry point of the gbs command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbs
