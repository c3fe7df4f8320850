/** @file game_io.hpp
 *  @brief Text serialization for games.
 *
 *  Format: a header line `n_players=<n>` followed by one line per coalition,
 *  `<bitmask_hex> <value>`, in ascending bitmask order. Values are written
 *  with shortest round-trip formatting so save/load is bit-exact.
 */

#ifndef CIU_GAME_IO_HPP
#define CIU_GAME_IO_HPP

#include <iosfwd>
#include <string>

#include "ciu/game.hpp"

namespace ciu {

std::string to_text(const Game& g);
Game game_from_text(const std::string& text);

void save_game(const Game& g, const std::string& path);
Game load_game(const std::string& path);

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

} // namespace ciu

#endif // CIU_GAME_IO_HPP
