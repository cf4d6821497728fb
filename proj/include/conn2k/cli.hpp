#pragma once

#include <string>
#include <vector>

namespace conn2k {

// Captured run of the command-line front end; out/err are what the binary
// would print. Exit codes: 0 success, 1 verdict-negative (check failed,
// splitting obstructed), 2 usage or input errors, 3 decompose with odd k.
struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args);

}  // namespace conn2k
