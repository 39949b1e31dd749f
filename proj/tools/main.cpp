#include <iostream>
#include <string>
#include <vector>

#include "heilbronn/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return heilbronn::dispatch(args, std::cout, std::cerr);
}
