#include <iostream>

#include "qjalg/cli.hpp"

int main(int argc, char** argv)
{
    return qjalg::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
