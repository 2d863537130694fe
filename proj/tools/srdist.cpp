#include <iostream>

#include "subriemann/cli.hpp"

int main(int argc, char** argv) { return subriemann::run_cli(argc, argv, std::cout, std::cerr); }
