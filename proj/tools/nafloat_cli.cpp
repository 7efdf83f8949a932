#include <iostream>

#include "nafloat/cli.hpp"

int main(int argc, char** argv) { return nafloat::cli::run(argc, argv, std::cout, std::cerr); }
