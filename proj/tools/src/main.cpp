#include <iostream>

#include "xop_cli/commands.hpp"

int main(int argc, char** argv) { return xop::cli::run(argc, argv, std::cout, std::cerr); }
