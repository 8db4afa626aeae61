#include <iostream>

#include "brauer/cli/run.hpp"

int main(int argc, char** argv) { return brauer::cli::run_main(argc, argv, std::cout, std::cerr); }
