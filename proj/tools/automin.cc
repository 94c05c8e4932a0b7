#include <iostream>
#include <string>
#include <vector>

#include "automin/cli.hh"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return automin::cli::run(args, std::cin, std::cout, std::cerr);
}
