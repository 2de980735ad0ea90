#include <iostream>

#include "qcurv/cli.hpp"

int main(int argc, char** argv) { return qcurv::cli::run(argc, argv, std::cout, std::cerr); }
