#include <iostream>

#include "hfs/app/cli.hpp"

int main(int argc, char** argv) { return hfs::cli::run(argc, argv, std::cout, std::cerr); }
