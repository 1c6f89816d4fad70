#include <iostream>

#include "copgame/cli.hpp"

int main(int argc, char** argv) { return copgame::cli::run(argc, argv, std::cout, std::cerr); }
