#include "ciu/game_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ciu {

std::string format_double(double v)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{})
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, end);
}

std::string to_text(const Game& g)
{
    std::string out = "n_players=" + std::to_string(g.n_players()) + "\n";
    char hex[16];
    for (Mask m = 0; m < (Mask{1} << g.n_players()); ++m) {
        std::snprintf(hex, sizeof(hex), "0x%x", m);
        out += hex;
        out += ' ';
        out += format_double(g.table()[m]);
        out += '\n';
    }
    return out;
}

Game game_from_text(const std::string& text)
{
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header))
        throw std::runtime_error("game file: empty input");
    const std::string prefix = "n_players=";
    if (header.rfind(prefix, 0) != 0)
        throw std::runtime_error("game file: missing n_players header");
    const int n = std::stoi(header.substr(prefix.size()));
    if (n < 0 || n > kMaxPlayers)
        throw std::runtime_error("game file: player count out of range");

    std::vector<double> worth(std::size_t{1} << n, 0.0);
    std::vector<bool> seen(worth.size(), false);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::string mask_str, value_str;
        if (!(row >> mask_str >> value_str))
            throw std::runtime_error("game file: malformed line: " + line);
        const Mask m = static_cast<Mask>(std::stoul(mask_str, nullptr, 16));
        if (m >= worth.size())
            throw std::runtime_error("game file: coalition mask out of range: " + mask_str);
        double v = 0.0;
        auto [p, ec] = std::from_chars(value_str.data(), value_str.data() + value_str.size(), v);
        if (ec != std::errc{} || p != value_str.data() + value_str.size())
            throw std::runtime_error("game file: bad value: " + value_str);
        worth[m] = v;
        seen[m] = true;
    }
    for (std::size_t m = 0; m < seen.size(); ++m)
        if (!seen[m]) {
            char b[24];
            std::snprintf(b, sizeof(b), "0x%zx", m);
            throw std::runtime_error(std::string("game file: missing entry for coalition ") + b);
        }
    return Game(n, std::move(worth));
}

void save_game(const Game& g, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("save_game: cannot open " + path);
    out << to_text(g);
}

Game load_game(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("load_game: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return game_from_text(buf.str());
}

} // namespace ciu
