#include "ciu/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc));
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return ciu::run_cli(std::move(args));
}
