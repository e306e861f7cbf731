#include "coxkl/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return coxkl::run_cli(argc, argv, std::cout, std::cerr); }
