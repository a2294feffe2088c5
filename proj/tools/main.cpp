#include <iostream>

#include "fqt/cli.hpp"

int main(int argc, char** argv)
{
    return fqt::cli::run(argc, argv, std::cout, std::cerr);
}
