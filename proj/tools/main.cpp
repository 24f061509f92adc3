#include <iostream>
#include <vector>

#include "hlv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hlv::run_cli(args, std::cout, std::cerr);
}
