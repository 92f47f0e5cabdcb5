#ifndef LEADSOLVE_LP_HPP
#define LEADSOLVE_LP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "leadsolve/matrix.hpp"
#include "leadsolve/rational.hpp"

namespace leadsolve {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Maximize, Minimize };

struct Constraint {
  RatVector coeffs;
  Relation relation = Relation::LessEq;
  Rational rhs;
};

/// A linear program over `num_vars` variables. Variables are nonnegative
/// unless marked free.
struct LinearProgram {
  explicit LinearProgram(std::size_t n = 0, Sense s = Sense::Maximize)
      : num_vars(n), sense(s), objective(n), free_vars(n, false) {}

  std::size_t num_vars;
  Sense sense;
  RatVector objective;
  std::vector<Constraint> constraints;
  std::vector<bool> free_vars;

  void add(RatVector coeffs, Relation rel, Rational rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
  void set_free(std::size_t var) { free_vars.at(var) = true; }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RatVector vertex;
  /// Multipliers of the maximization form (objective negated for Minimize),
  /// one per constraint; together with `value` they certify optimality.
  RatVector duals;

  bool optimal() const { return status == LpStatus::Optimal; }
};

/// Two-phase primal simplex in exact arithmetic (Dantzig pricing with a Bland
/// fallback on degenerate stalls). Output is a deterministic function of the input.
LpOutcome solve_lp(const LinearProgram& lp);

/// True when `x` satisfies every constraint and sign restriction exactly.
bool is_feasible(const LinearProgram& lp, const RatVector& x);

/// Checks an Optimal outcome independently of the pivoting: primal feasibility,
/// objective value, dual feasibility of `duals`, and equal dual objective.
bool certifies_optimality(const LinearProgram& lp, const LpOutcome& outcome);

/// H-representation { x : rows } of a polytope in R^dim.
struct Polytope {
  std::size_t dim = 0;
  std::vector<Constraint> rows;
};

struct InteriorWitness {
  RatVector point;
  Rational slack;
};

/// Maximizes s such that every coordinate is >= s and each row listed in
/// `strict_rows` holds with slack >= s. Returns the maximizer when s > 0.
/// The polytope is expected to lie in the probability simplex.
std::optional<InteriorWitness> relative_interior_witness(const Polytope& poly,
                                                         const std::vector<std::size_t>& strict_rows);

}  // namespace leadsolve

#endif  // LEADSOLVE_LP_HPP
