/// @file faultlens.cpp
/// @brief Entry point of the faultlens command line.

#include <iostream>
#include <string>
#include <vector>

#include "faultlens/service/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return faultlens::service::run_cli(args, std::cout, std::cerr);
}
