#include <iostream>

#include "qposet/cli.hpp"

int main(int argc, char** argv) { return qposet::run_cli(argc, argv, std::cout, std::cerr); }
