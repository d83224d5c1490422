#include <iostream>

#include "qgx/cli/cli.hpp"

int main(int argc, char** argv) {
    return qgx::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
