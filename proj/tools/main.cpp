#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return tate::cli::main_entry(argc, argv, std::cout, std::cerr);
}
