#include <iostream>

#include "riordan_cli/app.hpp"

int main(int argc, char** argv) { return riordan::cli::run_app(argc, argv, std::cout, std::cerr); }
