#ifndef LEADSOLVE_TWO_BY_TWO_HPP
#define LEADSOLVE_TWO_BY_TWO_HPP

#include <optional>
#include <string>
#include <vector>

#include "leadsolve/commitment.hpp"
#include "leadsolve/game.hpp"

namespace leadsolve {

// Entries are named row-major: A = [[a1, a2], [a3, a4]], B likewise.
// Mixed strategies of a player are (1 - t, t); t is the weight on the
// second pure strategy.

struct Equalizers {
  std::optional<Rational> d;  // x^d = (1 - d, d) equalizes player II's columns
  std::optional<MixedStrategy> xd;
  std::optional<Rational> c;  // y^c = (1 - c, c) equalizes player I's rows
  std::optional<MixedStrategy> yc;
  std::optional<Rational> beta_d;  // beta(x^d, y) for every y
};

Equalizers equalizers(const Game& g);

/// alpha^L and alpha^H of `leader` from the edge points {s1, x^d, s2}.
struct ClosedFormValues {
  Rational alpha_low;
  Rational alpha_high;
};

ClosedFormValues closed_form_values(const Game& g, Player leader);

enum class XlRelation { Subset, Equal, ExistsOutside };

struct LemmaConditions {
  bool degenerate_for_leader = false;
  bool ell1 = false;  // the leader has a strongly dominated pure strategy
  /// Only evaluated under ell1 with a unique Nash payoff alpha^N.
  bool ell2_evaluated = false;
  bool ell2 = false;  // x^d exists and alpha(x^d, j) >= alpha^N for some j
  bool ell2_strict = false;
  std::optional<Rational> alpha_N;
  XlRelation conclusion = XlRelation::Subset;  // Subset or ExistsOutside
};

LemmaConditions lemma_conditions(const Game& g, Player leader);

enum class Prop6Case { A, B_i, B_ii, B_iii };

Prop6Case proposition6_case(const Game& g);

enum class FollowerVerdict { FollowerWorse, FollowerNotWorse, NotApplicable };

struct FollowerComparison {
  FollowerVerdict verdict = FollowerVerdict::NotApplicable;
  /// Permutations bringing the leader view to a3 > a1, a4 > a2, b1 > b2, b3 < b4.
  bool rows_swapped = false;
  bool cols_swapped = false;
  std::optional<Rational> beta_F;
  std::optional<Rational> beta_N;
  std::optional<Rational> v_B;
  /// beta^F < beta^N  <=>  v_B < beta^N.
  bool biconditional_holds = true;
  /// ell2 holds strictly, so beta^F is the follower's only equilibrium payoff.
  bool unique = false;
};

FollowerComparison follower_comparison(const Game& g, Player leader);

/// LP-based counterparts, computed with the generic modules.
struct GenericLeaderView {
  Rational alpha_low;
  Rational alpha_high;
  std::vector<WeightInterval> XL;  // weight on the leader's second strategy
  XlRelation relation = XlRelation::Subset;
  FollowerVerdict follower = FollowerVerdict::NotApplicable;
  std::optional<Rational> beta_F;
  std::optional<Rational> beta_N;
};

GenericLeaderView generic_leader_view(const Game& g, Player leader, std::size_t enum_bound = kDefaultEnumBound);

/// Case label from the LP degeneracy test and the generic X^L vs NE(X) relations.
Prop6Case generic_case(const Game& g, const GenericLeaderView& I, const GenericLeaderView& II,
                       std::size_t enum_bound = kDefaultEnumBound);

struct TwoByTwoLeader {
  Player leader = Player::I;
  ClosedFormValues closed{};
  LemmaConditions lemma{};
  FollowerComparison follower{};
  GenericLeaderView generic{};
};

struct TwoByTwoReport {
  Equalizers eq{};
  TwoByTwoLeader leader_I{};
  TwoByTwoLeader leader_II{};
  Prop6Case prop6_case = Prop6Case::A;
  Prop6Case generic_prop6_case = Prop6Case::A;
  /// The case's claims hold for the generic relations (A and B_iii: both
  /// subsets; B_i: Y^L = NE(Y); B_ii: X^L = NE(X)).
  bool claims_hold = true;
  bool agrees = true;
  std::vector<std::string> disagreements;

  const TwoByTwoLeader& leader(Player p) const { return p == Player::I ? leader_I : leader_II; }
};

/// Closed form and generic pipeline side by side; throws StructuralError
/// unless the game is 2x2.
TwoByTwoReport analyze_two_by_two(const Game& g, std::size_t enum_bound = kDefaultEnumBound);

const char* to_string(XlRelation r);
const char* to_string(Prop6Case c);
const char* to_string(FollowerVerdict v);

}  // namespace leadsolve

#endif  // LEADSOLVE_TWO_BY_TWO_HPP
