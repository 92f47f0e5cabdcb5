#include "leadsolve/equilibria.hpp"

#include <algorithm>
#include <numeric>

#include "leadsolve/iesds.hpp"
#include "leadsolve/lp.hpp"

namespace leadsolve {

const char* to_string(NashMethod m) {
  switch (m) {
    case NashMethod::SupportEnumeration: return "support-enumeration";
    case NashMethod::VertexPairs: return "extreme-equilibria";
    case NashMethod::Iesds: return "iesds";
    case NashMethod::None: return "none";
  }
  return "?";
}

MaximinResult maximin(const Game& g, Player who) {
  // Row player's view: rows are who's strategies, entries who's payoffs.
  const RatMatrix own = who == Player::I ? g.A() : g.B().transposed();
  const std::size_t m = own.rows();
  LinearProgram lp(m + 1, Sense::Maximize);
  lp.objective[m] = 1;
  lp.set_free(m);
  for (std::size_t c = 0; c < own.cols(); ++c) {
    RatVector row(m + 1);
    for (std::size_t i = 0; i < m; ++i) row[i] = own(i, c);
    row[m] = -1;
    lp.add(std::move(row), Relation::GreaterEq, 0);
  }
  RatVector simplex(m + 1, Rational(1));
  simplex[m] = 0;
  lp.add(std::move(simplex), Relation::Equal, 1);
  LpOutcome out = solve_lp(lp);
  if (!out.optimal()) throw std::logic_error("maximin LP is always feasible and bounded");
  RatVector x(out.vertex.begin(), out.vertex.begin() + static_cast<std::ptrdiff_t>(m));
  return {out.value, MixedStrategy(who, std::move(x))};
}

bool is_nash(const Game& g, const MixedStrategy& x, const MixedStrategy& y) {
  if (x.owner() != Player::I || y.owner() != Player::II || x.size() != g.m() || y.size() != g.n()) {
    throw StructuralError("is_nash: strategy owner or size mismatch");
  }
  const RatVector ay = g.A().right_multiply(y.weights());
  const RatVector xb = g.B().left_multiply(x.weights());
  const Rational alpha = dot(x.weights(), ay);
  const Rational beta = dot(xb, y.weights());
  for (const auto& v : ay)
    if (v > alpha) return false;
  for (const auto& v : xb)
    if (v > beta) return false;
  return true;
}

std::vector<MixedStrategy> NashSet::strategies(Player p) const {
  std::vector<MixedStrategy> out;
  for (const auto& e : equilibria) {
    const auto& s = p == Player::I ? e.x : e.y;
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

bool NashSet::contains(const MixedStrategy& x, const MixedStrategy& y) const {
  return std::any_of(equilibria.begin(), equilibria.end(),
                     [&](const NashEquilibrium& e) { return e.x == x && e.y == y; });
}

namespace {

template <typename F>
void for_each_subset(std::size_t n, std::size_t size, F&& f) {
  if (size > n || size == 0) return;
  std::vector<std::size_t> pick(size);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    f(pick);
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t k = i; k < size; ++k) pick[k] = pick[k - 1] + 1;
  }
}

// Weights on `support` making every strategy in `against` indifferent under
// `payoff` (rows: against, columns: support). Empty when singular or when a
// weight is not strictly positive.
std::optional<RatVector> indifference(const RatMatrix& payoff, const std::vector<std::size_t>& against,
                                      const std::vector<std::size_t>& support, std::size_t full) {
  const std::size_t k = support.size();
  RatMatrix sys(k + 1, k + 1);
  RatVector rhs(k + 1);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) sys(r, c) = payoff(against[r], support[c]);
    sys(r, k) = -1;
  }
  for (std::size_t c = 0; c < k; ++c) sys(k, c) = 1;
  rhs[k] = 1;
  auto sol = solve_square(std::move(sys), std::move(rhs));
  if (!sol) return std::nullopt;
  RatVector w(full);
  for (std::size_t c = 0; c < k; ++c) {
    if ((*sol)[c].sign() <= 0) return std::nullopt;
    w[support[c]] = (*sol)[c];
  }
  return w;
}

NashEquilibrium make_equilibrium(const Game& g, MixedStrategy x, MixedStrategy y) {
  Rational a = payoff(g, x, y, Player::I);
  Rational b = payoff(g, x, y, Player::II);
  return {std::move(x), std::move(y), std::move(a), std::move(b)};
}

void fill_bounds(NashSet& s) {
  s.l.reset();
  s.h.reset();
  for (const auto& e : s.equilibria) {
    if (!s.l || e.alpha < *s.l) s.l = e.alpha;
    if (!s.h || e.alpha > *s.h) s.h = e.alpha;
  }
}

struct LabelledVertex {
  RatVector point;
  std::vector<bool> labels;
};

// Vertices of { z >= 0, M z <= 1 } other than 0. Labels 0..m+n-1: for the
// x-side polytope pass `nonneg_first` = true (labels of z_k = 0 come first).
std::vector<LabelledVertex> labelled_vertices(const RatMatrix& M, bool nonneg_first) {
  const std::size_t d = M.cols();
  const std::size_t rows = M.rows();
  const std::size_t total = d + rows;
  std::vector<LabelledVertex> out;
  // Constraint t < d: z_t >= 0; t >= d: row (t - d) of M z <= 1.
  auto label_of = [&](std::size_t t) { return nonneg_first ? t : (t < d ? rows + t : t - d); };
  for_each_subset(total, d, [&](const std::vector<std::size_t>& tight) {
    RatMatrix sys(d, d);
    RatVector rhs(d);
    for (std::size_t r = 0; r < d; ++r) {
      const std::size_t t = tight[r];
      if (t < d) {
        sys(r, t) = 1;
      } else {
        for (std::size_t c = 0; c < d; ++c) sys(r, c) = M(t - d, c);
        rhs[r] = 1;
      }
    }
    auto z = solve_square(std::move(sys), std::move(rhs));
    if (!z) return;
    bool nonzero = false;
    for (const auto& v : *z) {
      if (v.sign() < 0) return;
      if (v.sign() > 0) nonzero = true;
    }
    if (!nonzero) return;
    RatVector mz = M.right_multiply(*z);
    for (const auto& v : mz)
      if (v > Rational(1)) return;
    if (std::any_of(out.begin(), out.end(), [&](const LabelledVertex& v) { return v.point == *z; })) return;
    LabelledVertex v{*z, std::vector<bool>(total, false)};
    for (std::size_t t = 0; t < d; ++t) v.labels[label_of(t)] = (*z)[t].is_zero();
    for (std::size_t r = 0; r < rows; ++r) v.labels[label_of(d + r)] = mz[r] == Rational(1);
    out.push_back(std::move(v));
  });
  return out;
}

RatMatrix shifted_positive(const RatMatrix& m) {
  Rational lo = m(0, 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) lo = std::min(lo, m(r, c));
  RatMatrix out = m;
  const Rational shift = Rational(1) - lo;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) += shift;
  return out;
}

MixedStrategy normalized(Player p, const RatVector& z) {
  Rational total = sum(z);
  RatVector w = z;
  for (auto& v : w) v /= total;
  return MixedStrategy(p, std::move(w));
}

}  // namespace

std::vector<NashEquilibrium> support_enumeration(const Game& g) {
  std::vector<NashEquilibrium> out;
  const RatMatrix bt = g.B().transposed();
  for (std::size_t k = 1; k <= std::min(g.m(), g.n()); ++k) {
    for_each_subset(g.m(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(g.n(), k, [&](const std::vector<std::size_t>& cols) {
        auto y = indifference(g.A(), rows, cols, g.n());
        if (!y) return;
        auto x = indifference(bt, cols, rows, g.m());
        if (!x) return;
        MixedStrategy xs(Player::I, std::move(*x)), ys(Player::II, std::move(*y));
        if (is_nash(g, xs, ys)) out.push_back(make_equilibrium(g, std::move(xs), std::move(ys)));
      });
    });
  }
  return out;
}

std::vector<NashEquilibrium> extreme_equilibria(const Game& g) {
  const std::size_t m = g.m(), n = g.n();
  // P = { x >= 0 : B'^T x <= 1 }: labels i (x_i = 0), m + j (tight column j).
  // Q = { y >= 0 : A' y <= 1 }:   labels i (tight row i), m + j (y_j = 0).
  const auto pv = labelled_vertices(shifted_positive(g.B()).transposed(), true);
  const auto qv = labelled_vertices(shifted_positive(g.A()), false);
  std::vector<NashEquilibrium> out;
  for (const auto& p : pv) {
    for (const auto& q : qv) {
      bool complete = true;
      for (std::size_t t = 0; t < m + n && complete; ++t) complete = p.labels[t] || q.labels[t];
      if (!complete) continue;
      MixedStrategy x = normalized(Player::I, p.point);
      MixedStrategy y = normalized(Player::II, q.point);
      if (!is_nash(g, x, y)) throw std::logic_error("completely labelled pair is not an equilibrium");
      out.push_back(make_equilibrium(g, std::move(x), std::move(y)));
    }
  }
  return out;
}

NashSet nash_support_enumeration(const Game& g, std::size_t enum_bound) {
  NashSet s;
  if (g.m() + g.n() > enum_bound) {
    s.notes.push_back("m + n = " + std::to_string(g.m() + g.n()) + " exceeds the enumeration bound " +
                      std::to_string(enum_bound));
    return s;
  }
  s.checked = true;
  if (degenerate(g, enum_bound) == DegeneracyStatus::NonDegenerate) {
    s.equilibria = support_enumeration(g);
    s.method = NashMethod::SupportEnumeration;
    s.complete = true;
  } else {
    s.equilibria = extreme_equilibria(g);
    s.method = NashMethod::VertexPairs;
    s.complete = false;
    s.notes.push_back("degenerate game: only extreme equilibria are listed; l and h are still exact");
  }
  fill_bounds(s);
  return s;
}

NashSet solve_nash(const Game& g, std::size_t enum_bound) { return solve_nash(g, iesds(g), enum_bound); }

NashSet solve_nash(const Game& g, const IesdsResult& r, std::size_t enum_bound) {
  NashSet s;
  if (r.reduced.m() == 1 && r.reduced.n() == 1) {
    s.checked = true;
    s.complete = true;
    s.method = NashMethod::Iesds;
    s.equilibria.push_back(make_equilibrium(g, MixedStrategy::pure(Player::I, g.m(), r.surviving_rows[0]),
                                            MixedStrategy::pure(Player::II, g.n(), r.surviving_cols[0])));
  } else {
    NashSet reduced = nash_support_enumeration(r.reduced, enum_bound);
    s.checked = reduced.checked;
    s.complete = reduced.complete;
    s.method = reduced.method;
    s.notes = reduced.notes;
    for (const auto& e : reduced.equilibria) {
      RatVector x(g.m()), y(g.n());
      for (std::size_t i = 0; i < r.surviving_rows.size(); ++i) x[r.surviving_rows[i]] = e.x[i];
      for (std::size_t j = 0; j < r.surviving_cols.size(); ++j) y[r.surviving_cols[j]] = e.y[j];
      s.equilibria.push_back(
          make_equilibrium(g, MixedStrategy(Player::I, std::move(x)), MixedStrategy(Player::II, std::move(y))));
    }
  }
  if (!r.rounds.empty()) {
    s.notes.push_back("iesds removed " + std::to_string(g.m() - r.reduced.m()) + " rows and " +
                      std::to_string(g.n() - r.reduced.n()) + " columns in " +
                      std::to_string(r.rounds.size()) + " rounds");
  }
  fill_bounds(s);
  return s;
}

NashSet swap_roles(const NashSet& s) {
  NashSet out = s;
  for (auto& e : out.equilibria) {
    e = {MixedStrategy(Player::I, e.y.weights()), MixedStrategy(Player::II, e.x.weights()), e.beta, e.alpha};
  }
  fill_bounds(out);
  return out;
}

NashSet twisted_equilibria(const Game& g, std::size_t enum_bound) {
  NashSet s = solve_nash(g.twisted(), enum_bound);
  for (auto& e : s.equilibria) e = make_equilibrium(g, e.x, e.y);
  fill_bounds(s);
  return s;
}

bool is_saddle_point(const Game& g, const MixedStrategy& x, const MixedStrategy& y) {
  const RatVector ay = g.A().right_multiply(y.weights());  // alpha(i, y)
  const RatVector xa = g.A().left_multiply(x.weights());   // alpha(x, j)
  const RatVector by = g.B().right_multiply(y.weights());  // beta(i, y)
  const RatVector xb = g.B().left_multiply(x.weights());   // beta(x, j)
  const Rational alpha = dot(x.weights(), ay);
  const Rational beta = dot(xb, y.weights());
  for (const auto& v : ay)
    if (v > alpha) return false;
  for (const auto& v : xa)
    if (v < alpha) return false;
  for (const auto& v : xb)
    if (v > beta) return false;
  for (const auto& v : by)
    if (v < beta) return false;
  return true;
}

SaddleSet saddle_points(const Game& g, const NashSet& nash, const NashSet& twisted) {
  SaddleSet s;
  // S = NE and TE; when one list is complete, scanning it decides membership
  // of every saddle point by the direct inequalities.
  const NashSet& scan = nash.complete || !twisted.complete ? nash : twisted;
  s.complete = nash.complete || twisted.complete;
  for (const auto& e : scan.equilibria) {
    if (is_saddle_point(g, e.x, e.y)) s.points.push_back(e);
  }
  return s;
}

void validate_distribution(const Game& g, const RatMatrix& z) {
  if (z.rows() != g.m() || z.cols() != g.n()) {
    throw StructuralError("distribution z must be " + std::to_string(g.m()) + "x" + std::to_string(g.n()));
  }
  Rational total;
  for (std::size_t i = 0; i < z.rows(); ++i) {
    for (std::size_t j = 0; j < z.cols(); ++j) {
      if (z(i, j).sign() < 0) throw StructuralError("distribution z has a negative entry");
      total += z(i, j);
    }
  }
  if (total != Rational(1)) throw StructuralError("distribution z sums to " + total.str() + ", not 1");
}

CceCheck verify_cce(const Game& g, const RatMatrix& z) {
  validate_distribution(g, z);
  CceCheck c;
  RatVector col_marginal(g.n()), row_marginal(g.m());
  for (std::size_t i = 0; i < g.m(); ++i) {
    for (std::size_t j = 0; j < g.n(); ++j) {
      if (z(i, j).is_zero()) continue;
      c.value_I += z(i, j) * g.A()(i, j);
      c.value_II += z(i, j) * g.B()(i, j);
      col_marginal[j] += z(i, j);
      row_marginal[i] += z(i, j);
    }
  }
  const RatVector dev_I = g.A().right_multiply(col_marginal);
  const RatVector dev_II = g.B().left_multiply(row_marginal);
  auto worst = [](const RatVector& dev, const Rational& value) {
    CceDeviation w{0, dev[0] - value};
    for (std::size_t k = 1; k < dev.size(); ++k) {
      if (dev[k] - value > w.gain) w = {k, dev[k] - value};
    }
    return w;
  };
  c.worst_I = worst(dev_I, c.value_I);
  c.worst_II = worst(dev_II, c.value_II);
  c.ok = c.worst_I.gain.sign() <= 0 && c.worst_II.gain.sign() <= 0;
  return c;
}

}  // namespace leadsolve
