#include <iostream>

#include "latpol/cli.hpp"

int main(int argc, char** argv) { return latpol::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
