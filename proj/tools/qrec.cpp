#include <iostream>

#include "qrec/cli.hpp"

int main(int argc, char** argv) { return qrec::run_cli(argc, argv, std::cout, std::cerr); }
