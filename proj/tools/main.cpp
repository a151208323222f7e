#include <iostream>
#include <string>
#include <vector>

#include "sdcyc/output.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sdcyc::cli::run_cli(args, std::cout, std::cerr);
}
