#ifndef LEADSOLVE_COMMITMENT_HPP
#define LEADSOLVE_COMMITMENT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leadsolve/equilibria.hpp"
#include "leadsolve/game.hpp"

namespace leadsolve {

/// One commitment witness. Indices refer to the leader's and the follower's
/// strategies of the original game; `x` is owned by the leader.
struct LeaderWitness {
  MixedStrategy x;
  std::size_t region = 0;  // column j whose LP produced x
  std::size_t follower = 0;  // j^F, attains the leader payoff
  Rational leader_payoff;
  Rational follower_payoff;  // beta^F
  std::vector<std::size_t> best_replies;
  /// More than one pure best reply: inducing j^F needs an arbitrarily small
  /// perturbation of x, the reported value is the limit.
  bool tie = false;
};

struct CommitmentValue {
  Rational value;
  std::vector<LeaderWitness> witnesses;  // one per attaining column, by index
  std::size_t lps_solved = 0;
};

/// max over j in J of max over X(j) of the leader's payoff against j.
CommitmentValue alpha_high(const Game& g, Player leader);

/// max over j in D of max over X(j) of min over E(j) of the leader's payoff.
/// `d` is the D set of the leader view (`g.as_leader(leader)`) when known.
CommitmentValue alpha_low(const Game& g, Player leader, const DSet* d = nullptr);

struct ReportOptions {
  std::size_t enum_bound = kDefaultEnumBound;
  bool skip_degeneracy = false;
  bool with_nash = true;
  /// Equilibria of the game computed elsewhere; used instead of solve_nash.
  const NashSet* nash = nullptr;
};

struct LeaderReport {
  Player leader = Player::I;
  MaximinResult maximin;
  CommitmentValue low{};   // alpha^L
  CommitmentValue high{};  // alpha^H
  DSet d{};              // follower strategies, leader view
  NashSet nash{};          // equilibria of the original game
  std::optional<Rational> nash_l{};  // leader's lowest / highest NE payoff
  std::optional<Rational> nash_h{};
  DegeneracyStatus degeneracy = DegeneracyStatus::Unchecked;  // for the leader
  bool chain_ok = true;
  std::vector<std::string> chain_failures{};
};

LeaderReport leader_report(const Game& g, Player leader, const ReportOptions& opts = {});

enum class PureCommitmentVerdict { Confirmed, Violated, NotApplicable, NoPureWitness };

struct PureCommitmentCheck {
  struct Item {
    std::size_t leader_strategy;
    std::size_t follower_strategy;
    bool is_nash;
  };
  PureCommitmentVerdict verdict = PureCommitmentVerdict::NoPureWitness;
  std::vector<Item> items;
};

/// A pure commitment optimal strategy with the follower's reply is an NE when
/// the game is non-degenerate for the leader.
PureCommitmentCheck check_pure_commitment_nash(const Game& g, const LeaderReport& report);

enum class MixedImprovementVerdict { Improvement, Violated, NotApplicable };

struct MixedImprovementCheck {
  MixedImprovementVerdict verdict = MixedImprovementVerdict::NotApplicable;
  std::string reason;
  std::optional<NashEquilibrium> equilibrium;  // leader view: x is the leader's
  std::size_t j1 = 0;
  Rational alpha_j1;           // leader payoff at (x^N, j1)
  bool follower_indifferent = false;  // beta(x^N, j1) = beta^N
};

/// A completely mixed NE strategy that is not maximin is beaten by commitment
/// in a non-degenerate game.
MixedImprovementCheck completely_mixed_improvement(const Game& g, const LeaderReport& report,
                                                   std::size_t enum_bound = kDefaultEnumBound);

/// Closed interval of weights on the leader's second strategy.
struct WeightInterval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& t) const { return lo <= t && t <= hi; }
};

/// X^L for a leader with two pure strategies: the x in X(j), j in D, with
/// min over E(j) of the leader payoff >= alpha^L, as intervals in x_2.
std::vector<WeightInterval> commitment_optimal_set_2row(const Game& g, Player leader, const LeaderReport& report);

/// Whether `s` is part of some Nash equilibrium (one feasibility LP).
bool is_nash_strategy(const Game& g, const MixedStrategy& s);

const char* to_string(PureCommitmentVerdict v);
const char* to_string(MixedImprovementVerdict v);

}  // namespace leadsolve

#endif  // LEADSOLVE_COMMITMENT_HPP
