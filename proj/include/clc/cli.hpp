#ifndef CLC_CLI_HPP
#define CLC_CLI_HPP

#include <string>
#include <vector>

namespace clc {

/// Run the command-line tool. Exit codes: 0 success, 1 assertion or
/// computational failure, 2 usage error.
int run_cli(std::vector<std::string> args);

}  // namespace clc

#endif
