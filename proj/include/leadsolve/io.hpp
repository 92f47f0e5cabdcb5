#ifndef LEADSOLVE_IO_HPP
#define LEADSOLVE_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "leadsolve/game.hpp"
#include "leadsolve/matrix.hpp"

namespace leadsolve {

/// Parses a game document. `source` names the input in error messages.
/// Throws ParseError for malformed documents and bad tokens, StructuralError
/// for ragged or mismatched matrices.
Game parse_game(std::string_view text, const std::string& source = "<input>");
Game load_game(const std::string& path);

/// A bare matrix of rational tokens (a distribution over profiles).
RatMatrix parse_matrix(std::string_view text, const std::string& source = "<input>");
RatMatrix load_matrix(const std::string& path);

/// Game document accepted by parse_game; integers are written as numbers,
/// fractions as "p/q" strings.
std::string render_game(const Game& g);

}  // namespace leadsolve

#endif  // LEADSOLVE_IO_HPP
