#include <iostream>

#include "bergkern/cli.hpp"

int main(int argc, char** argv) { return bergkern::cli::run(argc, argv, std::cout, std::cerr); }
