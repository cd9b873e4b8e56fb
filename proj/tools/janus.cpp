#include <iostream>

#include "janus/cli.hpp"

int main(int argc, char** argv) { return janus::run_cli(argc, argv, std::cout, std::cerr); }
