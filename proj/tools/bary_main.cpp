#include <iostream>

#include "bary/cli.hpp"

int main(int argc, char** argv) { return bary::run_cli(argc, argv, std::cout, std::cerr); }
