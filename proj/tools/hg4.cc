#include <iostream>
#include <string>
#include <vector>

#include "hg4/cli.h"

int main(int argc, char **argv) {
    return hg4::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
