#include <iostream>
#include <string>
#include <vector>

#include "tridsign/cli.hpp"

int main(int argc, char** argv) {
    return tridsign::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
