#include <iostream>
#include <vector>

#include "qdouble/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qdouble::run_cli(args, std::cout, std::cerr);
}
