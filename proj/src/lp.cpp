#include "leadsolve/lp.hpp"

#include <limits>

namespace leadsolve {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

enum class ColumnKind { Structural, Slack, Surplus, Artificial };

struct Column {
  ColumnKind kind;
  std::size_t var = kNone;  // original variable for structural columns
  int sign = 1;             // +1 / -1 part of a split free variable
};

// Dense simplex tableau. Row 0 of the objective holds z_j - c_j, so a column
// improves the objective when its entry is negative.
class Tableau {
 public:
  Tableau(const LinearProgram& lp) : lp_(lp) { build(); }

  LpOutcome run() {
    LpOutcome out;
    if (!phase_one()) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    load_objective();
    if (!iterate(/*allow_artificial=*/false)) {
      out.status = LpStatus::Unbounded;
      return out;
    }
    out.status = LpStatus::Optimal;
    mpq_class value = obj_.back();
    if (lp_.sense == Sense::Minimize) value = -value;
    out.value = Rational(value);
    out.vertex = vertex();
    out.duals = duals();
    return out;
  }

 private:
  void build() {
    const std::size_t m = lp_.constraints.size();
    for (std::size_t j = 0; j < lp_.num_vars; ++j) {
      cols_.push_back({ColumnKind::Structural, j, 1});
      if (lp_.free_vars[j]) cols_.push_back({ColumnKind::Structural, j, -1});
    }
    const std::size_t structural = cols_.size();
    // Row normalization to nonnegative right-hand sides.
    row_sign_.assign(m, 1);
    std::vector<Relation> rel(m);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = lp_.constraints[i];
      rel[i] = c.relation;
      // Flip so the rhs is nonnegative; zero-rhs ">=" rows become "<=" rows
      // whose slack is a feasible starting basic variable.
      if (c.rhs.sign() < 0 || (c.rhs.sign() == 0 && rel[i] == Relation::GreaterEq)) {
        row_sign_[i] = -1;
        if (rel[i] == Relation::LessEq) rel[i] = Relation::GreaterEq;
        else if (rel[i] == Relation::GreaterEq) rel[i] = Relation::LessEq;
      }
    }
    identity_col_.assign(m, kNone);
    std::vector<std::size_t> surplus_col(m, kNone);
    for (std::size_t i = 0; i < m; ++i) {
      if (rel[i] == Relation::LessEq) {
        identity_col_[i] = cols_.size();
        cols_.push_back({ColumnKind::Slack, kNone, 1});
      } else if (rel[i] == Relation::GreaterEq) {
        surplus_col[i] = cols_.size();
        cols_.push_back({ColumnKind::Surplus, kNone, -1});
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (rel[i] != Relation::LessEq) {
        identity_col_[i] = cols_.size();
        cols_.push_back({ColumnKind::Artificial, kNone, 1});
      }
    }
    const std::size_t n = cols_.size();
    rows_.assign(m, std::vector<mpq_class>(n + 1));
    basis_.assign(m, kNone);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = lp_.constraints[i];
      if (c.coeffs.size() != lp_.num_vars) {
        throw StructuralError("constraint " + std::to_string(i) + " has " +
                              std::to_string(c.coeffs.size()) + " coefficients, expected " +
                              std::to_string(lp_.num_vars));
      }
      auto& row = rows_[i];
      for (std::size_t k = 0; k < structural; ++k) {
        const auto& a = c.coeffs[cols_[k].var].mpq();
        if (sgn(a) == 0) continue;
        row[k] = a;
        if (cols_[k].sign * row_sign_[i] < 0) row[k] = -row[k];
      }
      if (surplus_col[i] != kNone) row[surplus_col[i]] = -1;
      row[identity_col_[i]] = 1;
      row[n] = c.rhs.mpq();
      if (row_sign_[i] < 0) row[n] = -row[n];
      basis_[i] = identity_col_[i];
    }
    active_.assign(m, true);
  }

  bool is_artificial(std::size_t col) const { return cols_[col].kind == ColumnKind::Artificial; }

  bool phase_one() {
    const std::size_t n = cols_.size();
    obj_.assign(n + 1, 0);
    bool any = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (is_artificial(k)) obj_[k] = 1;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!is_artificial(basis_[i])) continue;
      any = true;
      for (std::size_t k = 0; k <= n; ++k) {
        if (sgn(rows_[i][k]) != 0) obj_[k] -= rows_[i][k];
      }
    }
    if (!any) return true;
    iterate(/*allow_artificial=*/true);
    if (sgn(obj_.back()) != 0) return false;
    // Drive zero-level artificials out of the basis, dropping redundant rows.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!active_[i] || !is_artificial(basis_[i])) continue;
      std::size_t col = kNone;
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_artificial(k) && sgn(rows_[i][k]) != 0) {
          col = k;
          break;
        }
      }
      if (col == kNone) {
        active_[i] = false;
      } else {
        pivot(i, col);
      }
    }
    return true;
  }

  void load_objective() {
    const std::size_t n = cols_.size();
    obj_.assign(n + 1, 0);
    std::vector<mpq_class> cost(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (cols_[k].kind != ColumnKind::Structural) continue;
      mpq_class c = lp_.objective[cols_[k].var].mpq();
      if (lp_.sense == Sense::Minimize) c = -c;
      cost[k] = cols_[k].sign > 0 ? c : mpq_class(-c);
      obj_[k] = -cost[k];
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!active_[i]) continue;
      const mpq_class& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t k = 0; k <= n; ++k) {
        if (sgn(rows_[i][k]) != 0) obj_[k] += cb * rows_[i][k];
      }
    }
  }

  // Dantzig pricing (most negative reduced cost, lowest index on ties).
  // After kStall consecutive degenerate pivots the rule switches to Bland's
  // lowest-index rule until the objective moves again, which rules out
  // cycling. Returns false when unbounded.
  bool iterate(bool allow_artificial) {
    constexpr int kStall = 32;
    const std::size_t n = cols_.size();
    mpq_class ratio, best;
    int degenerate_run = 0;
    for (;;) {
      const bool bland = degenerate_run >= kStall;
      std::size_t enter = kNone;
      for (std::size_t k = 0; k < n; ++k) {
        if (!allow_artificial && is_artificial(k)) continue;
        if (sgn(obj_[k]) >= 0) continue;
        if (enter == kNone || (!bland && cmp(obj_[k], obj_[enter]) < 0)) enter = k;
        if (bland) break;
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!active_[i] || sgn(rows_[i][enter]) <= 0) continue;
        ratio = rows_[i][n] / rows_[i][enter];
        if (leave == kNone) {
          leave = i;
          best = ratio;
          continue;
        }
        int c = cmp(ratio, best);
        if (c < 0 || (c == 0 && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      degenerate_run = sgn(best) == 0 ? degenerate_run + 1 : 0;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const std::size_t n = cols_.size();
    auto& prow = rows_[r];
    mpq_class inv = 1 / prow[c];
    nz_.clear();
    for (std::size_t k = 0; k <= n; ++k) {
      if (sgn(prow[k]) == 0) continue;
      prow[k] *= inv;
      nz_.push_back(k);
    }
    auto eliminate = [&](std::vector<mpq_class>& row) {
      if (sgn(row[c]) == 0) return;
      mpq_class f = row[c];
      for (std::size_t k : nz_) {
        mpq_mul(tmp_.get_mpq_t(), f.get_mpq_t(), prow[k].get_mpq_t());
        mpq_sub(row[k].get_mpq_t(), row[k].get_mpq_t(), tmp_.get_mpq_t());
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r && active_[i]) eliminate(rows_[i]);
    }
    eliminate(obj_);
    basis_[r] = c;
  }

  RatVector vertex() const {
    const std::size_t n = cols_.size();
    std::vector<mpq_class> x(lp_.num_vars);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!active_[i]) continue;
      const Column& col = cols_[basis_[i]];
      if (col.kind != ColumnKind::Structural) continue;
      if (col.sign > 0) x[col.var] += rows_[i][n];
      else x[col.var] -= rows_[i][n];
    }
    RatVector out;
    out.reserve(x.size());
    for (auto& v : x) out.emplace_back(std::move(v));
    return out;
  }

  RatVector duals() const {
    RatVector y(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!active_[i]) continue;
      mpq_class pi = obj_[identity_col_[i]];
      if (row_sign_[i] < 0) pi = -pi;
      y[i] = Rational(pi);
    }
    return y;
  }

  const LinearProgram& lp_;
  std::vector<Column> cols_;
  std::vector<std::vector<mpq_class>> rows_;
  std::vector<mpq_class> obj_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> identity_col_;
  std::vector<int> row_sign_;
  std::vector<bool> active_;
  std::vector<std::size_t> nz_;
  mpq_class tmp_;
};

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp) {
  if (lp.objective.size() != lp.num_vars || lp.free_vars.size() != lp.num_vars) {
    throw StructuralError("objective length does not match variable count");
  }
  Tableau t(lp);
  return t.run();
}

bool is_feasible(const LinearProgram& lp, const RatVector& x) {
  if (x.size() != lp.num_vars) return false;
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    if (!lp.free_vars[j] && x[j].sign() < 0) return false;
  }
  for (const auto& c : lp.constraints) {
    Rational lhs = dot(c.coeffs, x);
    switch (c.relation) {
      case Relation::LessEq: if (lhs > c.rhs) return false; break;
      case Relation::GreaterEq: if (lhs < c.rhs) return false; break;
      case Relation::Equal: if (lhs != c.rhs) return false; break;
    }
  }
  return true;
}

bool certifies_optimality(const LinearProgram& lp, const LpOutcome& outcome) {
  if (!outcome.optimal()) return false;
  if (!is_feasible(lp, outcome.vertex)) return false;
  if (dot(lp.objective, outcome.vertex) != outcome.value) return false;
  const auto& y = outcome.duals;
  if (y.size() != lp.constraints.size()) return false;
  const bool minimize = lp.sense == Sense::Minimize;
  Rational dual_value;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& c = lp.constraints[i];
    if (c.relation == Relation::LessEq && y[i].sign() < 0) return false;
    if (c.relation == Relation::GreaterEq && y[i].sign() > 0) return false;
    dual_value += y[i] * c.rhs;
  }
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    Rational reduced;
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
      reduced += y[i] * lp.constraints[i].coeffs[j];
    }
    Rational cj = minimize ? -lp.objective[j] : lp.objective[j];
    if (lp.free_vars[j] ? reduced != cj : reduced < cj) return false;
  }
  Rational primal = minimize ? -outcome.value : outcome.value;
  return dual_value == primal;
}

std::optional<InteriorWitness> relative_interior_witness(const Polytope& poly,
                                                         const std::vector<std::size_t>& strict_rows) {
  const std::size_t d = poly.dim;
  LinearProgram lp(d + 1, Sense::Maximize);
  lp.objective[d] = 1;
  lp.set_free(d);
  std::vector<bool> strict(poly.rows.size(), false);
  for (std::size_t r : strict_rows) strict.at(r) = true;
  for (std::size_t r = 0; r < poly.rows.size(); ++r) {
    const auto& row = poly.rows[r];
    if (row.coeffs.size() != d) throw StructuralError("polytope row has wrong dimension");
    RatVector coeffs = row.coeffs;
    coeffs.emplace_back(0);
    if (strict[r]) {
      if (row.relation == Relation::GreaterEq) coeffs[d] = -1;
      else if (row.relation == Relation::LessEq) coeffs[d] = 1;
    }
    lp.add(std::move(coeffs), row.relation, row.rhs);
  }
  for (std::size_t i = 0; i < d; ++i) {
    RatVector coeffs(d + 1);
    coeffs[i] = 1;
    coeffs[d] = -1;
    lp.add(std::move(coeffs), Relation::GreaterEq, 0);
  }
  LpOutcome out = solve_lp(lp);
  if (out.status == LpStatus::Unbounded) {
    throw StructuralError("relative_interior_witness: polytope is not bounded by the simplex");
  }
  if (!out.optimal() || out.value.sign() <= 0) return std::nullopt;
  RatVector point(out.vertex.begin(), out.vertex.begin() + static_cast<std::ptrdiff_t>(d));
  return InteriorWitness{std::move(point), out.value};
}

}  // namespace leadsolve
