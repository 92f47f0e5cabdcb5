#include "leadsolve/game.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace leadsolve {

const char* to_string(Player p) { return p == Player::I ? "I" : "II"; }

const char* to_string(DominanceKind k) {
  switch (k) {
    case DominanceKind::None: return "none";
    case DominanceKind::Weak: return "weak";
    case DominanceKind::Strong: return "strong";
  }
  return "?";
}

const char* to_string(DegeneracyStatus s) {
  switch (s) {
    case DegeneracyStatus::NonDegenerate: return "non-degenerate";
    case DegeneracyStatus::Degenerate: return "degenerate";
    case DegeneracyStatus::Unchecked: return "unchecked";
  }
  return "?";
}

Game::Game(RatMatrix a, RatMatrix b, std::vector<std::string> row_labels,
           std::vector<std::string> col_labels, std::string name)
    : a_(std::move(a)), b_(std::move(b)), row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)), name_(std::move(name)) {
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols()) {
    throw StructuralError("dimension mismatch: A is " + std::to_string(a_.rows()) + "x" +
                          std::to_string(a_.cols()) + " but B is " + std::to_string(b_.rows()) +
                          "x" + std::to_string(b_.cols()));
  }
  if (a_.rows() == 0 || a_.cols() == 0) throw StructuralError("game needs m >= 1 and n >= 1");
  if (row_labels_.empty()) {
    for (std::size_t i = 0; i < m(); ++i) row_labels_.push_back(std::to_string(i + 1));
  }
  if (col_labels_.empty()) {
    for (std::size_t j = 0; j < n(); ++j) col_labels_.push_back(std::to_string(m() + j + 1));
  }
  if (row_labels_.size() != m() || col_labels_.size() != n()) {
    throw StructuralError("label count does not match matrix dimensions");
  }
}

Game Game::transposed_roles() const {
  return Game(b_.transposed(), a_.transposed(), col_labels_, row_labels_, name_);
}

Game Game::twisted() const { return Game(-b_, -a_, row_labels_, col_labels_, name_); }

Game Game::restricted(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  std::vector<std::string> rl, cl;
  for (auto r : rows) rl.push_back(row_labels_.at(r));
  for (auto c : cols) cl.push_back(col_labels_.at(c));
  return Game(a_.select(rows, cols), b_.select(rows, cols), rl, cl, name_);
}

MixedStrategy::MixedStrategy(Player owner, RatVector weights)
    : owner_(owner), weights_(std::move(weights)) {
  if (weights_.empty()) throw StructuralError("mixed strategy over an empty set");
  for (const auto& w : weights_) {
    if (w.sign() < 0) throw StructuralError("mixed strategy with a negative weight " + to_string(weights_));
  }
  if (sum(weights_) != Rational(1)) {
    throw StructuralError("mixed strategy weights do not sum to 1: " + to_string(weights_));
  }
}

MixedStrategy MixedStrategy::pure(Player owner, std::size_t size, std::size_t index) {
  return MixedStrategy(owner, unit_vector(size, index));
}

MixedStrategy MixedStrategy::uniform(Player owner, std::size_t size) {
  return MixedStrategy(owner, RatVector(size, Rational(1, static_cast<long>(size))));
}

std::vector<std::size_t> MixedStrategy::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (!weights_[i].is_zero()) s.push_back(i);
  return s;
}

std::string describe(const Game& g, const MixedStrategy& s) {
  auto sup = s.support();
  if (sup.size() == 1) return (s.owner() == Player::I ? "s" : "t") + g.label(s.owner(), sup[0]);
  return to_string(s.weights());
}

namespace {

void check_profile(const Game& g, const MixedStrategy& x, const MixedStrategy& y) {
  if (x.owner() != Player::I || y.owner() != Player::II) {
    throw StructuralError("payoff expects (x of player I, y of player II)");
  }
  if (x.size() != g.m() || y.size() != g.n()) throw StructuralError("strategy dimension mismatch");
}

std::vector<std::size_t> argmax(const RatVector& v) {
  std::vector<std::size_t> out;
  const Rational& best = *std::max_element(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == best) out.push_back(i);
  return out;
}

}  // namespace

Rational payoff(const Game& g, const MixedStrategy& x, const MixedStrategy& y, Player who) {
  check_profile(g, x, y);
  return g.payoffs(who).bilinear(x.weights(), y.weights());
}

std::vector<std::size_t> pure_best_replies(const Game& g, const MixedStrategy& against) {
  if (against.owner() == Player::I) {
    if (against.size() != g.m()) throw StructuralError("strategy dimension mismatch");
    return argmax(g.B().left_multiply(against.weights()));
  }
  if (against.size() != g.n()) throw StructuralError("strategy dimension mismatch");
  return argmax(g.A().right_multiply(against.weights()));
}

std::vector<std::size_t> payoff_equivalent_class(const Game& g, std::size_t j) {
  if (j >= g.n()) throw StructuralError("column index out of range");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < g.n(); ++k) {
    bool same = true;
    for (std::size_t i = 0; i < g.m() && same; ++i) same = g.B()(i, k) == g.B()(i, j);
    if (same) out.push_back(k);
  }
  return out;
}

bool BestReplyRegion::contains(const RatVector& x) const {
  if (x.size() != polytope.dim) return false;
  for (const auto& row : polytope.rows) {
    Rational lhs = dot(row.coeffs, x);
    if (row.relation == Relation::Equal && lhs != row.rhs) return false;
    if (row.relation == Relation::GreaterEq && lhs < row.rhs) return false;
    if (row.relation == Relation::LessEq && lhs > row.rhs) return false;
  }
  return true;
}

void add_region_constraints(LinearProgram& lp, const Game& g, std::size_t j) {
  const std::size_t m = g.m();
  RatVector simplex(lp.num_vars);
  for (std::size_t i = 0; i < m; ++i) simplex[i] = 1;
  lp.add(std::move(simplex), Relation::Equal, 1);
  for (std::size_t k = 0; k < g.n(); ++k) {
    if (k == j) continue;
    RatVector row(lp.num_vars);
    for (std::size_t i = 0; i < m; ++i) row[i] = g.B()(i, j) - g.B()(i, k);
    lp.add(std::move(row), Relation::GreaterEq, 0);
  }
}

std::optional<std::vector<RatVector>> enumerate_vertices(const Polytope& poly, std::size_t max_bases) {
  const std::size_t d = poly.dim;
  std::vector<std::size_t> eq, ineq;
  for (std::size_t r = 0; r < poly.rows.size(); ++r) {
    (poly.rows[r].relation == Relation::Equal ? eq : ineq).push_back(r);
  }
  if (eq.size() > d) {
    // Over-determined equalities: keep those of full rank only.
    std::vector<std::size_t> kept;
    RatMatrix acc(0, d);
    for (auto r : eq) {
      RatMatrix trial = acc.with_row(poly.rows[r].coeffs);
      if (rank(trial) > rank(acc)) {
        acc = trial;
        kept.push_back(r);
      }
    }
    eq = kept;
  }
  const std::size_t need = d - eq.size();
  if (need > ineq.size()) return std::vector<RatVector>{};
  // Number of bases C(|ineq|, need), capped.
  {
    long double count = 1;
    for (std::size_t i = 0; i < need; ++i) {
      count = count * static_cast<long double>(ineq.size() - i) / static_cast<long double>(i + 1);
    }
    if (count > static_cast<long double>(max_bases)) return std::nullopt;
  }
  std::vector<RatVector> vertices;
  std::vector<std::size_t> pick(need);
  std::iota(pick.begin(), pick.end(), 0);
  auto feasible = [&](const RatVector& x) {
    for (const auto& row : poly.rows) {
      Rational lhs = dot(row.coeffs, x);
      if (row.relation == Relation::Equal && lhs != row.rhs) return false;
      if (row.relation == Relation::GreaterEq && lhs < row.rhs) return false;
      if (row.relation == Relation::LessEq && lhs > row.rhs) return false;
    }
    return true;
  };
  for (;;) {
    RatMatrix sys(d, d);
    RatVector rhs(d);
    std::size_t r = 0;
    for (auto e : eq) {
      for (std::size_t c = 0; c < d; ++c) sys(r, c) = poly.rows[e].coeffs[c];
      rhs[r++] = poly.rows[e].rhs;
    }
    for (auto p : pick) {
      const auto& row = poly.rows[ineq[p]];
      for (std::size_t c = 0; c < d; ++c) sys(r, c) = row.coeffs[c];
      rhs[r++] = row.rhs;
    }
    if (auto x = solve_square(sys, rhs); x && feasible(*x)) {
      if (std::find(vertices.begin(), vertices.end(), *x) == vertices.end()) vertices.push_back(*x);
    }
    // next combination
    std::size_t i = need;
    while (i > 0 && pick[i - 1] == ineq.size() - need + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t k = i; k < need; ++k) pick[k] = pick[k - 1] + 1;
  }
  std::sort(vertices.begin(), vertices.end(), [](const RatVector& a, const RatVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return vertices;
}

BestReplyRegion best_reply_region(const Game& g, std::size_t j, const RegionOptions& opts) {
  if (j >= g.n()) throw StructuralError("column index out of range");
  const std::size_t m = g.m();
  BestReplyRegion region;
  region.column = j;
  region.polytope.dim = m;
  region.polytope.rows.push_back({RatVector(m, Rational(1)), Relation::Equal, 1});
  for (std::size_t i = 0; i < m; ++i) {
    region.polytope.rows.push_back({unit_vector(m, i), Relation::GreaterEq, 0});
  }
  const auto equivalent = payoff_equivalent_class(g, j);
  std::vector<std::size_t> strict;
  for (std::size_t k = 0; k < g.n(); ++k) {
    if (k == j) continue;
    RatVector row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = g.B()(i, j) - g.B()(i, k);
    if (std::find(equivalent.begin(), equivalent.end(), k) == equivalent.end()) {
      strict.push_back(region.polytope.rows.size());
    }
    region.polytope.rows.push_back({std::move(row), Relation::GreaterEq, 0});
    region.region_row_columns.push_back(k);
  }
  region.interior = relative_interior_witness(region.polytope, strict);
  region.full_dimensional = region.interior.has_value();
  if (opts.enumerate_vertices && g.m() + g.n() <= opts.enum_bound) {
    region.vertices = enumerate_vertices(region.polytope);
  }
  return region;
}

DominanceResult dominance_check(const Game& g, Player who, std::size_t s) {
  // Rows of `own` are the strategies of `who`, columns the opponent's.
  const RatMatrix own = who == Player::I ? g.A() : g.B().transposed();
  if (s >= own.rows()) throw StructuralError("strategy index out of range");
  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < own.rows(); ++k)
    if (k != s) others.push_back(k);
  DominanceResult result;
  if (others.empty()) return result;
  const std::size_t w = others.size();
  auto embed = [&](const RatVector& vertex) {
    RatVector full(own.rows());
    for (std::size_t k = 0; k < w; ++k) full[others[k]] = vertex[k];
    return MixedStrategy(who, std::move(full));
  };

  // Payoffs shifted by their maximum (weights sum to one, so the programs are
  // unchanged): every row then has rhs <= 0 and starts with a basic slack.
  Rational top = own(0, 0);
  for (std::size_t k = 0; k < own.rows(); ++k)
    for (std::size_t c = 0; c < own.cols(); ++c) top = std::max(top, own(k, c));
  auto at = [&](std::size_t k, std::size_t c) { return own(k, c) - top; };

  LinearProgram strong(w + 1, Sense::Maximize);
  strong.objective[w] = 1;
  strong.set_free(w);
  for (std::size_t c = 0; c < own.cols(); ++c) {
    RatVector row(w + 1);
    for (std::size_t k = 0; k < w; ++k) row[k] = at(others[k], c);
    row[w] = -1;
    strong.add(std::move(row), Relation::GreaterEq, at(s, c));
  }
  {
    RatVector row(w + 1, Rational(1));
    row[w] = 0;
    strong.add(std::move(row), Relation::Equal, 1);
  }
  LpOutcome so = solve_lp(strong);
  if (so.optimal() && so.value.sign() > 0) {
    result.kind = DominanceKind::Strong;
    result.witness = embed(so.vertex);
    return result;
  }

  LinearProgram weak(w, Sense::Maximize);
  Rational base;
  for (std::size_t c = 0; c < own.cols(); ++c) {
    RatVector row(w);
    for (std::size_t k = 0; k < w; ++k) {
      row[k] = at(others[k], c);
      weak.objective[k] += row[k];
    }
    weak.add(std::move(row), Relation::GreaterEq, at(s, c));
    base += at(s, c);
  }
  weak.add(RatVector(w, Rational(1)), Relation::Equal, 1);
  LpOutcome wo = solve_lp(weak);
  if (wo.optimal() && wo.value > base) {
    result.kind = DominanceKind::Weak;
    result.witness = embed(wo.vertex);
  }
  return result;
}

bool covered_by_other_columns(const Game& g, std::size_t j) {
  const auto equivalent = payoff_equivalent_class(g, j);
  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < g.n(); ++k)
    if (std::find(equivalent.begin(), equivalent.end(), k) == equivalent.end()) others.push_back(k);
  if (others.empty()) return false;
  Rational top = g.B()(0, 0);
  for (std::size_t i = 0; i < g.m(); ++i)
    for (std::size_t k = 0; k < g.n(); ++k) top = std::max(top, g.B()(i, k));
  LinearProgram lp(others.size(), Sense::Maximize);
  for (std::size_t i = 0; i < g.m(); ++i) {
    RatVector row(others.size());
    for (std::size_t k = 0; k < others.size(); ++k) row[k] = g.B()(i, others[k]) - top;
    lp.add(std::move(row), Relation::GreaterEq, g.B()(i, j) - top);
  }
  lp.add(RatVector(others.size(), Rational(1)), Relation::Equal, 1);
  return solve_lp(lp).optimal();
}

bool DSet::contains(std::size_t j) const {
  return std::find(members.begin(), members.end(), j) != members.end();
}

namespace {

bool strict_reply_to_some_row(const Game& g, std::size_t j) {
  const auto equivalent = payoff_equivalent_class(g, j);
  for (std::size_t i = 0; i < g.m(); ++i) {
    bool strict = true;
    for (std::size_t k = 0; k < g.n() && strict; ++k) {
      if (std::find(equivalent.begin(), equivalent.end(), k) != equivalent.end()) continue;
      strict = g.B()(i, j) > g.B()(i, k);
    }
    if (strict) return true;
  }
  return false;
}

}  // namespace

DSet compute_D(const Game& g) {
  DSet d;
  RegionOptions opts;
  opts.enumerate_vertices = false;
  for (std::size_t j = 0; j < g.n(); ++j) {
    if (strict_reply_to_some_row(g, j)) {
      // X(j) contains a vertex where j beats every non-equivalent column
      // strictly, so it is full-dimensional and j is neither dominated nor
      // covered; no LP needed.
      d.members.push_back(j);
      continue;
    }
    if (best_reply_region(g, j, opts).full_dimensional) d.members.push_back(j);
    if (dominance_check(g, Player::II, j).kind != DominanceKind::None) d.weakly_dominated.push_back(j);
    if (covered_by_other_columns(g, j)) d.covered.push_back(j);
  }
  auto complement = [&](const std::vector<std::size_t>& excluded) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < g.n(); ++j)
      if (std::find(excluded.begin(), excluded.end(), j) == excluded.end()) out.push_back(j);
    return out;
  };
  d.matches_covered = complement(d.covered) == d.members;
  d.matches_weak_dominance = complement(d.weakly_dominated) == d.members;
  return d;
}

namespace {

// Feasibility of: x supported on `rows`, every k in `replies` a best reply.
std::optional<RatVector> support_with_replies(const RatMatrix& payoff_to_opponent,
                                              const std::vector<std::size_t>& rows,
                                              const std::vector<std::size_t>& replies) {
  const std::size_t s = rows.size();
  LinearProgram lp(s + 1, Sense::Maximize);
  lp.set_free(s);
  lp.add([&] { RatVector r(s + 1, Rational(1)); r[s] = 0; return r; }(), Relation::Equal, 1);
  for (std::size_t c = 0; c < payoff_to_opponent.cols(); ++c) {
    RatVector row(s + 1);
    for (std::size_t k = 0; k < s; ++k) row[k] = payoff_to_opponent(rows[k], c);
    row[s] = -1;
    bool in_replies = std::find(replies.begin(), replies.end(), c) != replies.end();
    lp.add(std::move(row), in_replies ? Relation::Equal : Relation::LessEq, 0);
  }
  LpOutcome out = solve_lp(lp);
  if (!out.optimal()) return std::nullopt;
  RatVector x(payoff_to_opponent.rows());
  for (std::size_t k = 0; k < s; ++k) x[rows[k]] = out.vertex[k];
  return x;
}

template <typename F>
bool for_each_subset(std::size_t n, std::size_t size, F&& f) {
  if (size > n) return false;
  std::vector<std::size_t> pick(size);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    if (f(pick)) return true;
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t k = i; k < size; ++k) pick[k] = pick[k - 1] + 1;
  }
}

}  // namespace

DegeneracyResult degenerate_for(const Game& g, Player who, std::size_t enum_bound) {
  DegeneracyResult result;
  if (g.m() + g.n() > enum_bound) return result;
  // Rows: strategies of `who`; columns: the opponent's; entries: opponent payoff.
  const RatMatrix opp = who == Player::I ? g.B() : g.A().transposed();
  const std::size_t own = opp.rows();
  const std::size_t other = opp.cols();
  // A mixed strategy whose support lies inside S and which has |S| + 1 best
  // replies is a degeneracy witness, so supports need not be exact.
  for (std::size_t size = 1; size <= own && size + 1 <= other; ++size) {
    bool found = for_each_subset(own, size, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(other, size + 1, [&](const std::vector<std::size_t>& replies) {
        auto x = support_with_replies(opp, rows, replies);
        if (!x) return false;
        result.witness = MixedStrategy(who, *x);
        result.best_replies = pure_best_replies(g, *result.witness);
        return true;
      });
    });
    if (found) {
      result.status = DegeneracyStatus::Degenerate;
      return result;
    }
  }
  result.status = DegeneracyStatus::NonDegenerate;
  return result;
}

DegeneracyStatus degenerate(const Game& g, std::size_t enum_bound) {
  auto a = degenerate_for(g, Player::I, enum_bound).status;
  auto b = degenerate_for(g, Player::II, enum_bound).status;
  if (a == DegeneracyStatus::Degenerate || b == DegeneracyStatus::Degenerate) return DegeneracyStatus::Degenerate;
  if (a == DegeneracyStatus::Unchecked || b == DegeneracyStatus::Unchecked) return DegeneracyStatus::Unchecked;
  return DegeneracyStatus::NonDegenerate;
}

}  // namespace leadsolve
