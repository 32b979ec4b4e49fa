#include <iostream>

#include "dcodes/cli.hpp"

int main(int argc, char** argv) { return dcodes::cli::run(argc, argv, std::cout, std::cerr); }
