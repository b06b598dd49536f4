#pragma once

#include <string>
#include <vector>

namespace polycurv {

// Entry point for the polycurv tool.  Exit codes: 0 success, 1 computation
// failure (diagnostic names the operation and witness), 2 usage errors.
int run_cli(int argc, const char* const* argv);

// Convenience overload for tests; args exclude the program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace polycurv
