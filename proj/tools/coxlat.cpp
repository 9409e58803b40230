#include <iostream>

#include "coxlat/cli/cli.hpp"

int main(int argc, char** argv) { return coxlat::cli::main_entry(argc, argv, std::cout, std::cerr); }
