#include <iostream>

#include "omega/cli.hh"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return omega::run(args, std::cout, std::cerr);
}
