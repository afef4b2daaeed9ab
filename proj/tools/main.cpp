#include "lgvsym/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lgvsym::cli::run(argc, argv, std::cout, std::cerr); }
