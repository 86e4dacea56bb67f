#include "polyloc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return polyloc::cli::run(argc, argv, std::cout, std::cerr); }
