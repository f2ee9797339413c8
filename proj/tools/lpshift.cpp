#include "lps/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lps::cli::runMain(argc, argv, std::cout, std::cerr); }
