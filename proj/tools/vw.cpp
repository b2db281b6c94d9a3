#include <iostream>
#include <string>
#include <vector>

#include "vw/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return vw::cli::run_command(args, std::cout, std::cerr);
}
