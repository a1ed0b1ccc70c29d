#include <iostream>

#include "jackson/cli.hpp"

int main(int argc, char** argv) { return jackson::cli::run(argc, argv, std::cout, std::cerr); }
