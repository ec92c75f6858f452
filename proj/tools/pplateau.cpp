#include "pplateau/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pplateau::cli_main(argc, argv, std::cout, std::cerr); }
