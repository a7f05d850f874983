#include "cli.hpp"

int main(int argc, char** argv) { return mtp::cli::run(argc, argv, std::cout, std::cerr); }
