#include <iostream>

#include "sepdfa/cli.hpp"

int main(int argc, char** argv) { return sepdfa::run_cli(argc, argv, std::cout, std::cerr); }
