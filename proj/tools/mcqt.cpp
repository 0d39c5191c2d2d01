#include "mcqt/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return mcqt::cli::main(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
