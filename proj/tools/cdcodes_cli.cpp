#include <iostream>
#include <string>
#include <vector>

#include "cdcodes/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cdcodes::cli::run_cli(args, std::cout, std::cerr);
}
