#include <iostream>

#include "recurlab/cli.hpp"

int main(int argc, char** argv) {
    return recurlab::run_cli(argc, argv, std::cout, std::cerr);
}
