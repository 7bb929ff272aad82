#include <iostream>

#include "assoc/cli.hpp"

int main(int argc, char** argv) {
    return assoc::main_with_args(argc, argv, std::cout, std::cerr);
}
