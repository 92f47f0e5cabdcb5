#ifndef LEADSOLVE_IESDS_HPP
#define LEADSOLVE_IESDS_HPP

#include <cstddef>
#include <vector>

#include "leadsolve/game.hpp"

namespace leadsolve {

struct Elimination {
  Player player = Player::I;
  std::size_t strategy = 0;  // index in the original game
  MixedStrategy dominator;   // over the original game's strategies of `player`
};

struct IesdsResult {
  Game reduced;
  std::vector<std::size_t> surviving_rows;  // original indices
  std::vector<std::size_t> surviving_cols;
  std::vector<std::vector<Elimination>> rounds;
};

enum class IesdsOrder {
  /// Every strategy that is strongly dominated in the current game is removed
  /// in the same round (player I first, lowest index first).
  Simultaneous,
  /// One strategy per round, highest index first, player II before player I.
  /// Used to check order independence.
  OneAtATimeReversed,
};

/// Iterated elimination of pure strategies strongly dominated by mixed
/// strategies over the survivors.
IesdsResult iesds(const Game& g, IesdsOrder order = IesdsOrder::Simultaneous);

}  // namespace leadsolve

#endif  // LEADSOLVE_IESDS_HPP
