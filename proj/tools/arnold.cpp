#include <iostream>

#include "arnold/cli.hpp"

int main(int argc, char** argv) { return arnold::run_cli(argc, argv, std::cout, std::cerr); }
