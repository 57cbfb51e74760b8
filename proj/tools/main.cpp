// SPDX-License-Identifier: MIT
#include "argsat/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return argsat::run_cli({argv + 1, argv + argc}, std::cout, std::cerr, std::cin);
}
