#include <iostream>

#include "superlocal/cli.hpp"

int main(int argc, char** argv) { return superlocal::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
