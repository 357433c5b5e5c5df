#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return coulomb_sharp::cli::run(argc, argv, std::cout, std::cerr); }
