#include <iostream>

#include "surfpen/cli/cli.hpp"

int main(int argc, char** argv) { return surfpen::cli::main(argc, argv, std::cout, std::cerr); }
