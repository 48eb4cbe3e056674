#include <iostream>
#include <string>
#include <vector>

#include "nabla/cli/commands.hpp"

int main(int argc, char** argv) {
    return nabla::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
