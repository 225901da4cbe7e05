#include <iostream>

#include "wrep/cli.hpp"

int main(int argc, char** argv) { return wrep::run_cli(argc, argv, std::cout, std::cerr); }
