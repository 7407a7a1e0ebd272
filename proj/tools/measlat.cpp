#include <iostream>

#include "measlat/cli/commands.hpp"

int main(int argc, char** argv) { return measlat::cli::run(argc, argv, std::cout, std::cerr); }
