// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#include <iostream>
#include <string>
#include <vector>

#include "widenkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return widenkit::cli::run(args, std::cout, std::cerr);
}
