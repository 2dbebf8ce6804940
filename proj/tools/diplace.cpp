#include <iostream>

#include "diplace/cli.hpp"

int main(int argc, char** argv) { return diplace::run(argc, argv, std::cout, std::cerr); }
