#pragma once

#include <string>
#include <vector>

namespace nichols {

// Runs the command-line front end. Exit codes: 0 success, 2 spec error,
// 3 budget exceeded. Output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::string& out, std::string& err);

}  // namespace nichols
