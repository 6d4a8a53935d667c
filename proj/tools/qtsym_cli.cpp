#include <string>
#include <vector>

#include "qtsym/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qtsym::run_cli(args);
}
