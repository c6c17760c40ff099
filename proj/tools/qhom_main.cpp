#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "qhom/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string stdin_text;
    if (!isatty(fileno(stdin))) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        stdin_text = ss.str();
    }
    return qhom::cli::run_cli(args, stdin_text, std::cout, std::cerr);
}
