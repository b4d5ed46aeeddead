#include <vector>

#include "orbichi/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return orbichi::run_cli(std::move(args));
}
