#include <iostream>
#include <string>
#include <vector>

#include "preisach/cli.hpp"

int main(int argc, char** argv) {
    return preisach::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
