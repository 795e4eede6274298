#include <iostream>

#include "iwasawa/cli.hpp"

int main(int argc, char** argv) { return iwasawa::cli_main(argc, argv, std::cout, std::cerr); }
