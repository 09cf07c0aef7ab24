#include <hardy/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return hardy::run_cli(argc, argv, std::cout, std::cerr); }
