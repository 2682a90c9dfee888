#include <iostream>

#include "fockbench/cli.hpp"

int main(int argc, char** argv) { return fock::cli::run(argc, argv, std::cout, std::cerr); }
