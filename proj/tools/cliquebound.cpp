#include <iostream>
#include <variant>

#include <cliquebound/cli.hpp>

int main(int argc, char** argv) {
    using namespace cliquebound::cli;
    auto parsed = parse_command_line(argc, argv, std::cout, std::cerr);
    if (const int* status = std::get_if<int>(&parsed)) {
        return *status;
    }
    return run(std::get<RunConfig>(parsed), std::cin, std::cout, std::cerr);
}
