#include <iostream>

#include "gincomplex/cli.hpp"

int main(int argc, char** argv) { return gincomplex::runCli(argc, argv, std::cout, std::cerr); }
