#include "demj/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return demj::cli::run(argc, argv, std::cout, std::cerr); }
