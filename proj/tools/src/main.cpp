#include <iostream>

#include "toruscm_cli/run.hpp"

int main(int argc, char** argv) { return toruscm::cli::run(argc, argv, std::cout, std::cerr); }
