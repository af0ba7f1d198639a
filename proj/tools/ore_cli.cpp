#include <iostream>

#include "ore/cli.hpp"

int main(int argc, char ** argv)
{
    return ore::cli::execute(argc, argv, std::cout, std::cerr);
}
