#include <iostream>

#include "fimcowp/cli.hpp"

int main(int argc, char** argv) { return fimcowp::cli::run(argc, argv, std::cout, std::cerr); }
