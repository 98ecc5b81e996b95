#include <iostream>

#include "isopair/cli.hpp"

int main(int argc, char** argv) { return isopair::cli::run(argc, argv, std::cout, std::cerr); }
