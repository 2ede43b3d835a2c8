#include "s1s/cli.hpp"

int main(int argc, char** argv) { return s1s::cli::run(argc, argv, std::cout, std::cerr); }
