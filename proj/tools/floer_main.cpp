#include <iostream>
#include <string>
#include <vector>

#include "floer/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return floer::run_cli(args, std::cout, std::cerr);
}
