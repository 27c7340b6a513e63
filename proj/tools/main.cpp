#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const auto config = mta::cli::parse_args(args);
        return mta::cli::run_command(config, std::cout, std::cerr);
    } catch (const mta::cli::UsageError& e) {
        (e.exit_code() == 0 ? std::cout : std::cerr) << e.what() << "\n";
        return e.exit_code();
    }
}
