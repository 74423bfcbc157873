#include <iostream>

#include "vcrit/cli.hpp"

int main(int argc, char** argv) {
    return vcrit::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
