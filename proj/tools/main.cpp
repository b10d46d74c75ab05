#include <iostream>
#include <string>
#include <vector>

#include "hodgepoly/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hodgepoly::run_cli(args, std::cout, std::cerr);
}
