#include <iostream>

#include "gstx/cli.hpp"

int main(int argc, char** argv) { return gstx::cli::run(argc, argv, std::cout, std::cerr); }
