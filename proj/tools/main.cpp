#include <iostream>

#include "hkdv/cli.hpp"

int main(int argc, char** argv) { return hkdv::run_cli(argc, argv, std::cout, std::cerr); }
