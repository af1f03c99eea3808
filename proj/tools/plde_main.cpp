#include <iostream>

#include "plde/cli/commands.hpp"

int main(int argc, char** argv) { return plde::run(argc, argv, std::cout, std::cerr); }
