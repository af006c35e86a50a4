#include "ltk_cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ltk::cli::run_cli(argc, argv, std::cout, std::cerr); }
