#include "rerail/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rerail::cli::run(args, std::cout, std::cerr);
}
