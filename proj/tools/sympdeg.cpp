#include <iostream>

#include "sympdeg/cli.hpp"

int main(int argc, char** argv) { return sympdeg::cli::run(argc, argv, std::cout, std::cerr); }
