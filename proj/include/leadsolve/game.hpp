#ifndef LEADSOLVE_GAME_HPP
#define LEADSOLVE_GAME_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leadsolve/lp.hpp"
#include "leadsolve/matrix.hpp"
#include "leadsolve/rational.hpp"

namespace leadsolve {

enum class Player { I, II };

inline Player opponent(Player p) { return p == Player::I ? Player::II : Player::I; }
const char* to_string(Player p);

/// Default bound on m + n for exponential enumerations (degeneracy,
/// support enumeration, vertex listings).
inline constexpr std::size_t kDefaultEnumBound = 16;

/// An m x n bimatrix game (A, B). Row i carries the label of pure strategy
/// s_i of player I, column j that of t_j of player II. Strategies are
/// addressed by zero-based index throughout the library.
class Game {
 public:
  Game(RatMatrix a, RatMatrix b, std::vector<std::string> row_labels = {},
       std::vector<std::string> col_labels = {}, std::string name = {});

  std::size_t m() const { return a_.rows(); }
  std::size_t n() const { return a_.cols(); }
  const RatMatrix& A() const { return a_; }
  const RatMatrix& B() const { return b_; }
  const RatMatrix& payoffs(Player p) const { return p == Player::I ? a_ : b_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  const std::string& name() const { return name_; }
  std::size_t strategy_count(Player p) const { return p == Player::I ? m() : n(); }
  const std::string& label(Player p, std::size_t s) const {
    return p == Player::I ? row_labels_.at(s) : col_labels_.at(s);
  }

  /// Swaps the players: the result has A' = B^T, B' = A^T, so player II of
  /// this game becomes player I (the row player) of the result.
  Game transposed_roles() const;
  /// The twisted game with payoffs (-B, -A).
  Game twisted() const;
  /// Game restricted to the listed rows/columns (labels carried along).
  Game restricted(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// Game seen from `leader` as the row player.
  Game as_leader(Player leader) const { return leader == Player::I ? *this : transposed_roles(); }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  RatMatrix a_;
  RatMatrix b_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::string name_;
};

/// A mixed strategy of one player; weights are nonnegative and sum to one.
class MixedStrategy {
 public:
  MixedStrategy(Player owner, RatVector weights);
  static MixedStrategy pure(Player owner, std::size_t size, std::size_t index);
  static MixedStrategy uniform(Player owner, std::size_t size);

  Player owner() const { return owner_; }
  const RatVector& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  std::vector<std::size_t> support() const;
  bool is_pure() const { return support().size() == 1; }
  bool completely_mixed() const { return support().size() == size(); }

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  Player owner_;
  RatVector weights_;
};

std::string describe(const Game& g, const MixedStrategy& s);

/// x^T A y (who = I) or x^T B y (who = II).
Rational payoff(const Game& g, const MixedStrategy& x, const MixedStrategy& y, Player who);

/// Pure strategies of the opponent of `against.owner()` that maximize the
/// opponent's payoff against `against`.
std::vector<std::size_t> pure_best_replies(const Game& g, const MixedStrategy& against);

/// Columns k whose B-column equals column j entrywise (j included).
std::vector<std::size_t> payoff_equivalent_class(const Game& g, std::size_t j);

/// The best reply region X(j) of column j over player I's simplex.
struct BestReplyRegion {
  std::size_t column = 0;
  /// Row 0 is sum(x) = 1, rows 1..m are x_i >= 0, then one row
  /// x^T B (e_j - e_k) >= 0 per k != j (see `region_row_columns`).
  Polytope polytope;
  std::vector<std::size_t> region_row_columns;
  bool full_dimensional = false;
  std::optional<InteriorWitness> interior;
  /// Vertices of the region (the edge points C(j) when m = 2). Empty
  /// when the region is empty; absent when the game exceeds the bound.
  std::optional<std::vector<RatVector>> vertices;

  bool contains(const RatVector& x) const;
};

struct RegionOptions {
  bool enumerate_vertices = true;
  std::size_t enum_bound = kDefaultEnumBound;
};

BestReplyRegion best_reply_region(const Game& g, std::size_t j, const RegionOptions& opts = {});

/// Builds the region constraints on the first m variables of a program with
/// `extra` further variables; used by the commitment LPs.
void add_region_constraints(LinearProgram& lp, const Game& g, std::size_t j);

/// Vertices of a bounded polytope by exhaustive basis enumeration, sorted
/// lexicographically; nullopt when the number of bases exceeds `max_bases`.
std::optional<std::vector<RatVector>> enumerate_vertices(const Polytope& poly,
                                                         std::size_t max_bases = 200000);

enum class DominanceKind { None, Weak, Strong };

struct DominanceResult {
  DominanceKind kind = DominanceKind::None;
  std::optional<MixedStrategy> witness;
};

/// Whether pure strategy `s` of `who` is dominated by a mixture of that
/// player's other pure strategies.
DominanceResult dominance_check(const Game& g, Player who, std::size_t s);

/// True when some mixture of columns outside E(j) is >= column j of B entrywise.
bool covered_by_other_columns(const Game& g, std::size_t j);

struct DSet {
  std::vector<std::size_t> members;            // full-dimensional regions
  std::vector<std::size_t> weakly_dominated;   // by dominance_check
  std::vector<std::size_t> covered;            // weakly dominated or equal to a mixture
  /// D equals J minus `covered` (always expected) ...
  bool matches_covered = true;
  /// ... and equals J minus `weakly_dominated` unless some column is a
  /// mixture of non-equivalent columns.
  bool matches_weak_dominance = true;

  bool contains(std::size_t j) const;
};

DSet compute_D(const Game& g);

enum class DegeneracyStatus { NonDegenerate, Degenerate, Unchecked };

struct DegeneracyResult {
  DegeneracyStatus status = DegeneracyStatus::Unchecked;
  std::optional<MixedStrategy> witness;
  std::vector<std::size_t> best_replies;

  bool degenerate() const { return status == DegeneracyStatus::Degenerate; }
};

/// Decides whether some mixed strategy of `who` has more pure best replies
/// than the size of its support.
DegeneracyResult degenerate_for(const Game& g, Player who, std::size_t enum_bound = kDefaultEnumBound);
/// Degenerate for either player; Unchecked if either check is.
DegeneracyStatus degenerate(const Game& g, std::size_t enum_bound = kDefaultEnumBound);

const char* to_string(DominanceKind k);
const char* to_string(DegeneracyStatus s);

}  // namespace leadsolve

#endif  // LEADSOLVE_GAME_HPP
