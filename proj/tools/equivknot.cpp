#include <iostream>

#include "equivknot/cli.hpp"

int main(int argc, char** argv) { return equivknot::cli::run(argc, argv, std::cout, std::cerr); }
