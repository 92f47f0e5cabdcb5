#ifndef LEADSOLVE_CLASSIFY_HPP
#define LEADSOLVE_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leadsolve/equilibria.hpp"
#include "leadsolve/game.hpp"

namespace leadsolve {

inline constexpr std::uint64_t kDefaultSeed = 20170101;

/// Sufficient conditions for the leader (as the row player of
/// `g.as_leader(leader)`). Optional fields are nullopt when the exact
/// cell enumeration exceeds the bound and no shortcut applies.
struct SufficientConditions {
  /// Every best reply gives the leader his worst column payoff.
  bool cond5 = false;
  /// Some x0 in X(j) with min_k alpha(x0, k) >= alpha^H.
  bool cond6 = false;
  /// Against every x some best reply gives the leader his best column payoff.
  std::optional<bool> cond7;
  /// Some x0 attains alpha^H with alpha(x0, .) constant on BR(x0).
  std::optional<bool> cond_alt;
};

SufficientConditions check_sufficient_conditions(const Game& g, Player leader,
                                                 std::size_t enum_bound = kDefaultEnumBound);

/// A violating triple: `deviator` compares `first` against `second` while
/// the opponent plays `other`.
struct WucWitness {
  Player deviator = Player::I;
  MixedStrategy first;
  MixedStrategy second;
  MixedStrategy other;
  Rational own_first, own_second;  // deviator's payoffs
  Rational opp_first, opp_second;  // opponent's payoffs
};

enum class WucVerdict { Yes, No, Unknown };

struct WucResult {
  WucVerdict verdict = WucVerdict::Unknown;
  std::optional<WucWitness> witness;
  std::string method;
};

struct WucOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 64;
};

WucResult classify_wuc(const Game& g, const WucOptions& opts = {});

/// Recomputes the witness payoffs and checks that they break one of the
/// two implications of the definition.
bool verify_wuc_witness(const Game& g, const WucWitness& w);

enum class AscVerdict { Yes, No, Unchecked };

struct AscResult {
  AscVerdict verdict = AscVerdict::Unchecked;
  std::string note;
};

AscResult classify_asc(const Game& g, const NashSet& nash, const NashSet& twisted);
AscResult classify_asc(const Game& g, std::size_t enum_bound = kDefaultEnumBound);

enum class AcoopVerdict { Yes, No, Unknown };

struct AcoopResult {
  AcoopVerdict verdict = AcoopVerdict::Unknown;
  std::optional<NashEquilibrium> pareto_optimal;  // certified twisted equilibrium
  std::string note;
};

AcoopResult classify_acoop(const Game& g, const NashSet& twisted);
AcoopResult classify_acoop(const Game& g, std::size_t enum_bound = kDefaultEnumBound);

struct ClassifyOptions {
  std::size_t enum_bound = kDefaultEnumBound;
  WucOptions wuc;
};

struct ClassificationReport {
  SufficientConditions player_I;
  SufficientConditions player_II;
  WucResult wuc;
  AscResult asc;
  AcoopResult acoop;
  std::vector<std::string> notes;

  const SufficientConditions& conditions(Player p) const { return p == Player::I ? player_I : player_II; }
};

ClassificationReport classify(const Game& g, const ClassifyOptions& opts = {});

const char* to_string(WucVerdict v);
const char* to_string(AscVerdict v);
const char* to_string(AcoopVerdict v);

}  // namespace leadsolve

#endif  // LEADSOLVE_CLASSIFY_HPP
