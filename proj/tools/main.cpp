#include <iostream>
#include <string>
#include <vector>

#include "schubertq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return schubertq::cli::run(std::move(args), std::cout, std::cerr);
}
