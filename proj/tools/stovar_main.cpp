#include <iostream>

#include "stovar/cli.hpp"

int main(int argc, char** argv) { return stovar::cli::run(argc, argv, std::cout, std::cerr); }
