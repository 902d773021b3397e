#include <iostream>

#include "hkcover/cli.hpp"

int main(int argc, char** argv) { return hk::run(argc, argv, std::cout, std::cerr); }
