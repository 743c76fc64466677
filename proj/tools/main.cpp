#include "gdsum/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return gdsum::run(argc, argv, std::cout, std::cerr); }
