#include <iostream>

#include "ordclass/cli.hpp"

int main(int argc, char** argv)
{
    return ordclass::cli::run(argc, argv, std::cout, std::cerr);
}
