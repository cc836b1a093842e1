#include <iostream>

#include "interpcat/cli.hpp"

int main(int argc, char** argv) { return interpcat::run_cli(argc, argv, std::cout, std::cerr); }
