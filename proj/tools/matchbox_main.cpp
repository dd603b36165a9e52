#include <iostream>

#include "matchbox/cli.hpp"

int main(int argc, char** argv) {
    return matchbox::cli::run(argc, argv, std::cout, std::cerr);
}
