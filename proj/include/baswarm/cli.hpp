#pragma once

#include <string>
#include <vector>

namespace baswarm {

/// Command-line entry point. Args exclude the program name. Returns 0 on
/// success, 1 on a validation/usage error, 2 on a runtime failure.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, const char* const argv[]);

}  // namespace baswarm
