#include <iostream>

#include "hall/cli.hpp"

int main(int argc, char** argv) { return hall::cli::run(argc, argv, std::cout, std::cerr); }
