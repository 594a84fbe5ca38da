#include <iostream>

#include "glevi/cli.hpp"

int main(int argc, char** argv) { return glevi::cli_main(argc, argv, std::cout, std::cerr); }
