#include <iostream>
#include <vector>

#include "tpareto/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tpareto::run_cli(args, std::cin, std::cout, std::cerr);
}
