#include <iostream>
#include <string>
#include <vector>

#include "conn2k/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    conn2k::CliResult res = conn2k::run_cli(args);
    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
}
