#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return nilp::run_cli(argc, argv, std::cout, std::cerr); }
