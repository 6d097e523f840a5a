#include <iostream>
#include <string>
#include <vector>

#include "ratginv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ratginv::run_command(args, std::cout, std::cerr);
}
