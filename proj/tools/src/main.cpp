#include <iostream>

#include "knotrep_cli/commands.hpp"

int main(int argc, char** argv) { return knotrep::cli::run_cli(argc, argv, std::cout, std::cerr); }
