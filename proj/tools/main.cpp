#include <iostream>

#include "sigmainv/cli.hpp"

int main(int argc, char** argv) {
    return sigmainv::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
