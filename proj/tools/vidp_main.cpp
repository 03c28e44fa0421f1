#include <iostream>

#include "vidp/cli.hpp"

int main(int argc, char** argv) { return vidp::run_cli(argc, argv, std::cout, std::cerr); }
