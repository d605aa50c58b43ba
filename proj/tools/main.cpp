#include <iostream>

#include "sternpoly/cli.hpp"

int main(int argc, char** argv) { return sternpoly::run_cli(argc, argv, std::cout, std::cerr); }
