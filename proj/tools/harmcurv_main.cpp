#include <iostream>

#include "harmcurv/cli.hpp"

int main(int argc, char** argv) { return harmcurv::cli::main(argc, argv, std::cout, std::cerr); }
