#include <iostream>

#include "sparsehom/cli.hpp"

int main(int argc, char **argv) {
    return sparsehom::run_cli(argc, argv, std::cout, std::cerr);
}
