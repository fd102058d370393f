#include <iostream>
#include <string>
#include <vector>

#include "hz/cli.hpp"

int main(int argc, char **argv) {
    const std::vector<std::string> args(argv, argv + argc);
    const hz::cli::Output o = hz::cli::run(args);
    std::cout << o.out;
    std::cerr << o.err;
    return o.exit_code;
}
