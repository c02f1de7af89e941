#include <iostream>

#include "ldpc/cli.hpp"

int main(int argc, char** argv) { return ldpc::cli::run(argc, argv, std::cout, std::cerr); }
