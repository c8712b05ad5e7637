#include "qeuler/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qeuler::cli::run_cli(argc, argv, std::cout, std::cerr); }
