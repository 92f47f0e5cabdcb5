#ifndef LEADSOLVE_EQUILIBRIA_HPP
#define LEADSOLVE_EQUILIBRIA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leadsolve/game.hpp"
#include "leadsolve/iesds.hpp"

namespace leadsolve {

struct MaximinResult {
  Rational value;
  MixedStrategy strategy;
};

/// v_A = max_x min_j alpha(x, j) for who = I, v_B = max_y min_i beta(i, y)
/// for who = II, with a maximin witness.
MaximinResult maximin(const Game& g, Player who);

struct NashEquilibrium {
  MixedStrategy x;
  MixedStrategy y;
  Rational alpha;
  Rational beta;
};

/// Exact check that x and y are mutual best replies.
bool is_nash(const Game& g, const MixedStrategy& x, const MixedStrategy& y);

enum class NashMethod { SupportEnumeration, VertexPairs, Iesds, None };

struct NashSet {
  std::vector<NashEquilibrium> equilibria;
  /// The list is the whole (finite) equilibrium set.
  bool complete = false;
  /// False when the game exceeds the enumeration bound; the list is empty.
  bool checked = false;
  NashMethod method = NashMethod::None;
  /// Lowest and highest alpha^N. They are exact whenever `checked`, also for
  /// degenerate games: alpha is bilinear, so its extremes over each product
  /// of polytopes in the equilibrium set sit at extreme equilibria.
  std::optional<Rational> l;
  std::optional<Rational> h;
  std::vector<std::string> notes;

  std::vector<MixedStrategy> strategies(Player p) const;
  bool contains(const MixedStrategy& x, const MixedStrategy& y) const;
};

/// Equal-size support enumeration; only valid as a complete method for
/// non-degenerate games.
std::vector<NashEquilibrium> support_enumeration(const Game& g);

/// Extreme equilibria as completely labelled vertex pairs of the best reply
/// polytopes; works for degenerate games.
std::vector<NashEquilibrium> extreme_equilibria(const Game& g);

/// Nash equilibria by support enumeration (non-degenerate games) or extreme
/// equilibria (degenerate games, complete = false).
NashSet nash_support_enumeration(const Game& g, std::size_t enum_bound = kDefaultEnumBound);

/// Reduces the game by iesds first and enumerates the reduced game, so games
/// solvable by dominance (TrD) stay within reach.
NashSet solve_nash(const Game& g, std::size_t enum_bound = kDefaultEnumBound);
/// The same with a reduction of `g` computed beforehand.
NashSet solve_nash(const Game& g, const IesdsResult& reduction, std::size_t enum_bound = kDefaultEnumBound);

/// The same equilibria seen in Game::transposed_roles (x and y swapped,
/// alpha and beta swapped).
NashSet swap_roles(const NashSet& s);

/// Nash equilibria of (-B, -A), reported with the original alpha, beta.
NashSet twisted_equilibria(const Game& g, std::size_t enum_bound = kDefaultEnumBound);

/// The four saddle inequalities, checked against every pure deviation.
bool is_saddle_point(const Game& g, const MixedStrategy& x, const MixedStrategy& y);

struct SaddleSet {
  std::vector<NashEquilibrium> points;
  bool complete = false;
};

SaddleSet saddle_points(const Game& g, const NashSet& nash, const NashSet& twisted);

struct CceDeviation {
  std::size_t strategy = 0;
  Rational gain;  // deviation payoff minus payoff under z
};

struct CceCheck {
  bool ok = false;
  Rational value_I;
  Rational value_II;
  CceDeviation worst_I;
  CceDeviation worst_II;
};

/// z must be m x n, nonnegative, summing to one.
void validate_distribution(const Game& g, const RatMatrix& z);
CceCheck verify_cce(const Game& g, const RatMatrix& z);

const char* to_string(NashMethod m);

}  // namespace leadsolve

#endif  // LEADSOLVE_EQUILIBRIA_HPP
