#include <iostream>

#include "midpoint/cli.hpp"

int main(int argc, char** argv) { return midpoint::cli::run(argc, argv, std::cout, std::cerr); }
