#include <iostream>

#include "nlper/cli.hpp"

int main(int argc, char** argv) { return nlper::cli::run(argc, argv, std::cout, std::cerr); }
