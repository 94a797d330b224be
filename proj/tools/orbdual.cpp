#include <iostream>

#include "orbdual/cli.hpp"

int main(int argc, char** argv) { return orbdual::run(argc, argv, std::cout, std::cerr); }
