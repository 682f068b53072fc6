#include <iostream>

#include "ilwhodge/cli.hpp"

int main(int argc, char** argv) { return ilwhodge::cli::run(argc, argv, std::cout, std::cerr); }
