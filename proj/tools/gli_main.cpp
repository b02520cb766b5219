#include <iostream>

#include "gli/cli.hpp"

int main(int argc, char** argv) { return gli::cli::run(argc, argv, std::cout, std::cerr); }
