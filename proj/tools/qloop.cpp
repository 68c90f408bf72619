#include <iostream>

#include "qloop/cli.hpp"

int main(int argc, char** argv) { return qloop::cli::run(argc, argv, std::cout, std::cerr); }
