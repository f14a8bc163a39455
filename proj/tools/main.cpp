#include <iostream>

#include "hyperlandau_cli/cli.hpp"

int main(int argc, char** argv) { return hyperlandau::cli::run(argc, argv, std::cout, std::cerr); }
