#include <iostream>

#include "hurwitz_cli/cli.hpp"

int main(int argc, char** argv) {
    return hurwitz::cli::run_cli(argc, argv, std::cout, std::cerr);
}
