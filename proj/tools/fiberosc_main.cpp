#include <iostream>
#include <string>
#include <vector>

#include "fiberosc/cli_runner.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fiberosc::run_cli(args, std::cout, std::cerr);
}
