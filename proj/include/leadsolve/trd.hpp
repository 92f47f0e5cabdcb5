#ifndef LEADSOLVE_TRD_HPP
#define LEADSOLVE_TRD_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "leadsolve/classify.hpp"
#include "leadsolve/commitment.hpp"
#include "leadsolve/equilibria.hpp"
#include "leadsolve/iesds.hpp"

namespace leadsolve {

/// Raised when an instance is larger than the solver accepts.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kTrdMinClaim = 2;
inline constexpr int kTrdCapacity = 200;

/// Traveler's Dilemma with claims {2, ..., max_claim} and reward/penalty 2.
struct TrdSpec {
  int max_claim = 100;
};

/// alpha(i, j) = i + 2 if i < j, i if i = j, j - 2 if i > j; beta(i, j) = alpha(j, i).
/// Strategy labels are the claims. Throws StructuralError when max_claim < 3.
Game build_trd(const TrdSpec& spec);

/// Index of a claim in the game built by build_trd.
inline std::size_t trd_index(int claim) { return static_cast<std::size_t>(claim - kTrdMinClaim); }

struct TrdCce {
  std::string description;
  RatMatrix z;
  CceCheck check;
};

struct TrdSolution {
  Game game;
  IesdsResult iesds;
  NashSet nash;
  NashSet twisted;
  SaddleSet saddle;
  LeaderReport leader;  // on the full game
  AscResult asc;
  AcoopResult acoop;
  std::vector<TrdCce> cce;
};

/// Throws CapacityError when max_claim exceeds kTrdCapacity.
TrdSolution solve_trd(const TrdSpec& spec, Player leader = Player::I);

}  // namespace leadsolve

#endif  // LEADSOLVE_TRD_HPP
