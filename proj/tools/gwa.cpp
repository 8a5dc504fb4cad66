#include <vector>

#include "gwa/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gwa::cli::run_command(args, std::cout, std::cerr);
}
