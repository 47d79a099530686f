#include <vsft_cli/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return vsft::cli::run(argc, argv, std::cout, std::cerr); }
