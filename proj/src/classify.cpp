#include "leadsolve/classify.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "leadsolve/commitment.hpp"
#include "leadsolve/lp.hpp"

namespace leadsolve {

const char* to_string(WucVerdict v) {
  switch (v) {
    case WucVerdict::Yes: return "yes";
    case WucVerdict::No: return "no";
    case WucVerdict::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(AscVerdict v) {
  switch (v) {
    case AscVerdict::Yes: return "yes";
    case AscVerdict::No: return "no";
    case AscVerdict::Unchecked: return "unchecked";
  }
  return "?";
}

const char* to_string(AcoopVerdict v) {
  switch (v) {
    case AcoopVerdict::Yes: return "yes";
    case AcoopVerdict::No: return "no";
    case AcoopVerdict::Unknown: return "unknown";
  }
  return "?";
}

namespace {

struct Row {
  RatVector coeffs;
  Rational rhs;
};

RatVector column_difference(const RatMatrix& M, std::size_t a, std::size_t b) {
  RatVector r(M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i) r[i] = M(i, a) - M(i, b);
  return r;
}

// A point of the cell where the follower's best replies are exactly K,
// additionally satisfying `strict` (coeffs . x > rhs) and `equal` rows.
// With `closed` every strict inequality is relaxed to >=.
std::optional<RatVector> cell_point(const Game& g, const std::vector<std::size_t>& K,
                                    const std::vector<Row>& strict, const std::vector<Row>& equal, bool closed) {
  const std::size_t m = g.m();
  LinearProgram lp(m + 1, Sense::Maximize);
  lp.objective[m] = 1;
  auto extend = [&](const RatVector& coeffs, bool slack) {
    RatVector row(coeffs);
    row.push_back(slack && !closed ? Rational(-1) : Rational(0));
    return row;
  };
  {
    RatVector simplex(m + 1, Rational(1));
    simplex[m] = 0;
    lp.add(std::move(simplex), Relation::Equal, 1);
    RatVector cap(m + 1);
    cap[m] = 1;
    lp.add(std::move(cap), Relation::LessEq, 1);
  }
  const std::size_t j0 = K.front();
  for (std::size_t j = 0; j < g.n(); ++j) {
    if (j == j0) continue;
    RatVector diff = column_difference(g.B(), j0, j);
    if (std::find(K.begin(), K.end(), j) != K.end()) {
      lp.add(extend(diff, false), Relation::Equal, 0);
    } else {
      lp.add(extend(diff, true), Relation::GreaterEq, 0);
    }
  }
  for (const auto& r : strict) lp.add(extend(r.coeffs, true), Relation::GreaterEq, r.rhs);
  for (const auto& r : equal) lp.add(extend(r.coeffs, false), Relation::Equal, r.rhs);
  LpOutcome out = solve_lp(lp);
  if (!out.optimal()) return std::nullopt;
  if (!closed && out.value.sign() <= 0) return std::nullopt;
  return RatVector(out.vertex.begin(), out.vertex.begin() + static_cast<std::ptrdiff_t>(m));
}

// Visits every K whose closed cell is nonempty; supersets of an empty closed
// cell are empty as well. Stops when `visit` returns true.
template <typename F>
bool for_each_cell(const Game& g, F&& visit) {
  std::vector<std::size_t> K;
  auto dfs = [&](auto&& self, std::size_t next) -> bool {
    for (std::size_t j = next; j < g.n(); ++j) {
      K.push_back(j);
      if (cell_point(g, K, {}, {}, true)) {
        if (visit(K) || self(self, j + 1)) return true;
      }
      K.pop_back();
    }
    return false;
  };
  return dfs(dfs, 0);
}

bool cond5_holds(const Game& gl) {
  for (std::size_t j = 0; j < gl.n(); ++j) {
    for (std::size_t k = 0; k < gl.n(); ++k) {
      if (k == j) continue;
      LinearProgram lp(gl.m(), Sense::Maximize);
      lp.objective = column_difference(gl.A(), j, k);
      add_region_constraints(lp, gl, j);
      LpOutcome out = solve_lp(lp);
      if (out.optimal() && out.value.sign() > 0) return false;
    }
  }
  return true;
}

bool cond6_holds(const Game& gl, const Rational& alpha_h) {
  for (std::size_t j = 0; j < gl.n(); ++j) {
    LinearProgram lp(gl.m(), Sense::Maximize);
    add_region_constraints(lp, gl, j);
    for (std::size_t k = 0; k < gl.n(); ++k) lp.add(gl.A().column(k), Relation::GreaterEq, alpha_h);
    if (solve_lp(lp).optimal()) return true;
  }
  return false;
}

bool cond7_holds(const Game& gl) {
  const bool violated = for_each_cell(gl, [&](const std::vector<std::size_t>& K) {
    for (std::size_t star = 0; star < gl.n(); ++star) {
      if (std::find(K.begin(), K.end(), star) != K.end()) continue;
      std::vector<Row> strict;
      for (std::size_t j : K) strict.push_back({column_difference(gl.A(), star, j), Rational()});
      if (cell_point(gl, K, strict, {}, false)) return true;
    }
    return false;
  });
  return !violated;
}

bool constant_on_replies(const Game& gl, const RatVector& x) {
  const RatVector ax = gl.A().left_multiply(x);
  const auto br = pure_best_replies(gl, MixedStrategy(Player::I, x));
  return std::all_of(br.begin(), br.end(), [&](std::size_t j) { return ax[j] == ax[br.front()]; });
}

}  // namespace

SufficientConditions check_sufficient_conditions(const Game& g, Player leader, std::size_t enum_bound) {
  const Game gl = g.as_leader(leader);
  const CommitmentValue high = alpha_high(g, leader);
  SufficientConditions c;
  c.cond5 = cond5_holds(gl);
  c.cond6 = cond6_holds(gl, high.value);
  for (const auto& w : high.witnesses) {
    if (constant_on_replies(gl, w.x.weights())) c.cond_alt = true;
  }
  if (gl.m() + gl.n() > enum_bound) return c;
  c.cond7 = cond7_holds(gl);
  if (!c.cond_alt) {
    c.cond_alt = for_each_cell(gl, [&](const std::vector<std::size_t>& K) {
      std::vector<Row> equal;
      for (std::size_t k : K) equal.push_back({gl.A().column(k), high.value});
      return cell_point(gl, K, {}, equal, false).has_value();
    });
  }
  return c;
}

// ---------------------------------------------------------------- wuc

namespace {

// Both sides are handled as the row player's side of a view game: the
// deviator owns the rows, `view.A()` holds the deviator's payoffs.
struct Side {
  Game view;
  Player deviator;
};

WucWitness make_witness(const Side& s, RatVector x1, RatVector x2, RatVector y) {
  const Game& v = s.view;
  WucWitness w{s.deviator,
               MixedStrategy(s.deviator, std::move(x1)),
               MixedStrategy(s.deviator, std::move(x2)),
               MixedStrategy(opponent(s.deviator), std::move(y)),
               {}, {}, {}, {}};
  w.own_first = v.A().bilinear(w.first.weights(), w.other.weights());
  w.own_second = v.A().bilinear(w.second.weights(), w.other.weights());
  w.opp_first = v.B().bilinear(w.first.weights(), w.other.weights());
  w.opp_second = v.B().bilinear(w.second.weights(), w.other.weights());
  return w;
}

bool breaks_definition(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2) {
  return (a1 > a2 && b1 > b2) || (a1 == a2 && b1 != b2);
}

std::optional<WucWitness> pure_scan(const Side& s) {
  const Game& v = s.view;
  for (std::size_t y = 0; y < v.n(); ++y) {
    for (std::size_t x1 = 0; x1 < v.m(); ++x1) {
      for (std::size_t x2 = 0; x2 < v.m(); ++x2) {
        if (x1 == x2) continue;
        if (breaks_definition(v.A()(x1, y), v.A()(x2, y), v.B()(x1, y), v.B()(x2, y))) {
          return make_witness(s, unit_vector(v.m(), x1), unit_vector(v.m(), x2), unit_vector(v.n(), y));
        }
      }
    }
  }
  return std::nullopt;
}

RatVector random_weights(std::mt19937_64& rng, std::size_t size) {
  std::uniform_int_distribution<long> digit(0, 9);
  std::vector<long> raw(size);
  long total = 0;
  for (auto& r : raw) total += (r = digit(rng));
  if (total == 0) {
    raw[std::uniform_int_distribution<std::size_t>(0, size - 1)(rng)] = 1;
    total = 1;
  }
  RatVector w;
  for (long r : raw) w.emplace_back(r, total);
  return w;
}

std::optional<WucWitness> sample_scan(const Side& s, std::mt19937_64& rng, std::size_t samples) {
  const Game& v = s.view;
  for (std::size_t t = 0; t < samples; ++t) {
    RatVector x1 = random_weights(rng, v.m());
    RatVector x2 = random_weights(rng, v.m());
    RatVector y = random_weights(rng, v.n());
    if (x1 == x2) continue;
    const RatVector ay = v.A().right_multiply(y);
    const RatVector by = v.B().right_multiply(y);
    if (breaks_definition(dot(x1, ay), dot(x2, ay), dot(x1, by), dot(x2, by))) {
      return make_witness(s, std::move(x1), std::move(x2), std::move(y));
    }
  }
  return std::nullopt;
}

// Rows M_r - M_0, r >= 1: payoff differences along the directions e_r - e_0
// that span the zero-sum subspace of the deviator's simplex.
RatMatrix differences(const RatMatrix& M) {
  std::vector<RatVector> rows;
  for (std::size_t r = 1; r < M.rows(); ++r) {
    RatVector d(M.cols());
    for (std::size_t c = 0; c < M.cols(); ++c) d[c] = M(r, c) - M(0, c);
    rows.push_back(std::move(d));
  }
  return RatMatrix::from_rows(rows);
}

// All 2x2 minors of [Ma y, Mb y] vanish identically as quadratic forms in y.
bool minors_vanish(const RatMatrix& Ma, const RatMatrix& Mb) {
  const std::size_t n = Ma.cols();
  for (std::size_t a = 0; a < Ma.rows(); ++a) {
    for (std::size_t b = a + 1; b < Ma.rows(); ++b) {
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p; q < n; ++q) {
          Rational sym = Ma(a, p) * Mb(b, q) - Ma(b, p) * Mb(a, q);
          if (p != q) sym += Ma(a, q) * Mb(b, p) - Ma(b, q) * Mb(a, p);
          if (!sym.is_zero()) return false;
        }
      }
    }
  }
  return true;
}

bool is_zero_vector(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

// At a fixed y the definition asks Mb y = lambda Ma y with lambda <= 0
// (and Mb y = 0 when Ma y = 0). Returns direction coordinates c breaking it.
std::optional<RatVector> violation_at(const RatMatrix& Ma, const RatMatrix& Mb, const RatVector& y) {
  const RatVector f = Ma.right_multiply(y);
  const RatVector g = Mb.right_multiply(y);
  if (is_zero_vector(f)) {
    if (is_zero_vector(g)) return std::nullopt;
    return g;
  }
  std::size_t r = 0;
  while (f[r].is_zero()) ++r;
  const Rational lambda = g[r] / f[r];
  bool parallel = true;
  for (std::size_t i = 0; i < f.size() && parallel; ++i) parallel = g[i] == lambda * f[i];
  if (!parallel) {
    // c = a f + b g with c.f = c.g = 1.
    const Rational ff = dot(f, f), fg = dot(f, g), gg = dot(g, g);
    const Rational det = ff * gg - fg * fg;
    const Rational a = (gg - fg) / det, b = (ff - fg) / det;
    RatVector c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = a * f[i] + b * g[i];
    return c;
  }
  if (lambda.sign() > 0) return f;
  return std::nullopt;
}

std::optional<WucWitness> witness_from_direction(const Side& s, const RatVector& c, RatVector y) {
  const std::size_t m = s.view.m();
  RatVector d(m);
  Rational largest;
  for (std::size_t i = 0; i < c.size(); ++i) {
    d[i + 1] = c[i];
    d[0] -= c[i];
  }
  for (const auto& v : d) largest = std::max(largest, abs(v));
  const Rational eps = Rational(1) / (Rational(static_cast<long>(m)) * largest);
  RatVector x2(m, Rational(1, static_cast<long>(m)));
  RatVector x1(m);
  for (std::size_t i = 0; i < m; ++i) x1[i] = x2[i] + eps * d[i];
  return make_witness(s, std::move(x1), std::move(x2), std::move(y));
}

std::vector<RatVector> pure_and_midpoints(std::size_t n, bool midpoints) {
  std::vector<RatVector> pts;
  for (std::size_t j = 0; j < n; ++j) pts.push_back(unit_vector(n, j));
  if (!midpoints) return pts;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      RatVector y(n);
      y[j] = Rational(1, 2);
      y[k] = Rational(1, 2);
      pts.push_back(std::move(y));
    }
  }
  return pts;
}

// Points on the edges [e_j, e_k] where a row of Ma changes sign.
std::vector<RatVector> zero_crossings(const RatMatrix& Ma) {
  std::vector<RatVector> pts;
  const std::size_t n = Ma.cols();
  for (std::size_t r = 0; r < Ma.rows(); ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Rational& p = Ma(r, j);
        const Rational& q = Ma(r, k);
        if ((p * q).sign() >= 0) continue;
        RatVector y(n);
        y[j] = q / (q - p);
        y[k] = Rational(1) - y[j];
        pts.push_back(std::move(y));
      }
    }
  }
  return pts;
}

enum class Structural { Holds, Violated, Inconclusive };

Structural structural_test(const Side& s, std::optional<WucWitness>& witness) {
  const Game& v = s.view;
  if (v.m() < 2) return Structural::Holds;
  const RatMatrix Ma = differences(v.A());
  const RatMatrix Mb = differences(v.B());
  const bool parallel = minors_vanish(Ma, Mb);
  // A nonzero quadratic form is nonzero at some vertex or edge midpoint, so
  // a non-parallel pair shows up there. When the minors vanish, Ma y and Mb y
  // are proportional everywhere and the sign of the ratio only changes where
  // Ma y crosses zero, so vertices and crossings decide it.
  std::vector<RatVector> candidates = pure_and_midpoints(v.n(), !parallel);
  if (parallel) {
    for (auto& y : zero_crossings(Ma)) candidates.push_back(std::move(y));
  }
  for (const auto& y : candidates) {
    if (auto c = violation_at(Ma, Mb, y)) {
      witness = witness_from_direction(s, *c, y);
      return Structural::Violated;
    }
  }
  return parallel ? Structural::Holds : Structural::Inconclusive;
}

}  // namespace

WucResult classify_wuc(const Game& g, const WucOptions& opts) {
  const Side sides[2] = {{g, Player::I}, {g.transposed_roles(), Player::II}};
  WucResult result;
  auto refuted = [&](std::optional<WucWitness> w, const char* method) {
    if (!w) return false;
    result.verdict = WucVerdict::No;
    result.witness = std::move(w);
    result.method = method;
    return true;
  };
  for (const auto& s : sides)
    if (refuted(pure_scan(s), "pure triple scan")) return result;
  std::mt19937_64 rng(opts.seed);
  for (const auto& s : sides)
    if (refuted(sample_scan(s, rng, opts.samples), "mixed triple sample")) return result;
  bool all_hold = true;
  for (const auto& s : sides) {
    std::optional<WucWitness> w;
    Structural st = structural_test(s, w);
    if (refuted(std::move(w), "structural test")) return result;
    all_hold = all_hold && st == Structural::Holds;
  }
  result.verdict = all_hold ? WucVerdict::Yes : WucVerdict::Unknown;
  result.method = all_hold ? "structural test (parallel payoff differences, sign checked at vertices and crossings)"
                           : "structural test inconclusive";
  return result;
}

bool verify_wuc_witness(const Game& g, const WucWitness& w) {
  const Game view = w.deviator == Player::I ? g : g.transposed_roles();
  const auto& x1 = w.first.weights();
  const auto& x2 = w.second.weights();
  const auto& y = w.other.weights();
  if (x1.size() != view.m() || x2.size() != view.m() || y.size() != view.n()) return false;
  const Rational a1 = view.A().bilinear(x1, y), a2 = view.A().bilinear(x2, y);
  const Rational b1 = view.B().bilinear(x1, y), b2 = view.B().bilinear(x2, y);
  if (a1 != w.own_first || a2 != w.own_second || b1 != w.opp_first || b2 != w.opp_second) return false;
  return breaks_definition(a1, a2, b1, b2);
}

// ---------------------------------------------------------------- asc / a-cooperative

namespace {

using PayoffPairs = std::vector<std::pair<Rational, Rational>>;

PayoffPairs payoff_pairs(const NashSet& s) {
  PayoffPairs out;
  for (const auto& e : s.equilibria) out.emplace_back(e.alpha, e.beta);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool zero_sum(const Game& g) { return g.twisted() == g; }

}  // namespace

AscResult classify_asc(const Game& g, const NashSet& nash, const NashSet& twisted) {
  if (zero_sum(g)) return {AscVerdict::Yes, "zero-sum: the twisted game is the game itself"};
  if (!nash.checked || !twisted.checked) return {AscVerdict::Unchecked, "equilibrium enumeration skipped (bound)"};
  if (!nash.complete || !twisted.complete) {
    return {AscVerdict::Unchecked, "equilibrium sets not enumerated completely (degenerate game)"};
  }
  if (saddle_points(g, nash, twisted).points.empty()) return {AscVerdict::No, "no saddle point"};
  if (payoff_pairs(nash) != payoff_pairs(twisted)) {
    return {AscVerdict::No, "Nash and twisted equilibrium payoffs differ"};
  }
  return {AscVerdict::Yes, "saddle point exists and equilibrium payoff sets coincide"};
}

AscResult classify_asc(const Game& g, std::size_t enum_bound) {
  if (zero_sum(g)) return classify_asc(g, NashSet{}, NashSet{});
  return classify_asc(g, solve_nash(g, enum_bound), twisted_equilibria(g, enum_bound));
}

AcoopResult classify_acoop(const Game& g, const NashSet& twisted) {
  AcoopResult r;
  if (!twisted.checked) {
    r.note = "twisted equilibria not enumerated (bound)";
    return r;
  }
  bool all_dominated = true;
  for (const auto& e : twisted.equilibria) {
    bool dominated = false;
    for (std::size_t i = 0; i < g.m() && !dominated; ++i) {
      for (std::size_t j = 0; j < g.n() && !dominated; ++j) {
        const Rational& a = g.A()(i, j);
        const Rational& b = g.B()(i, j);
        dominated = a >= e.alpha && b >= e.beta && (a > e.alpha || b > e.beta);
      }
    }
    if (dominated) continue;
    all_dominated = false;
    // Every strategy pair pays a point of the hull of pure payoff pairs; zero
    // surplus over (alpha, beta) inside that hull rules out any dominator.
    const std::size_t cells = g.m() * g.n();
    LinearProgram lp(cells, Sense::Maximize);
    RatVector ones(cells, Rational(1)), ra(cells), rb(cells);
    for (std::size_t i = 0; i < g.m(); ++i) {
      for (std::size_t j = 0; j < g.n(); ++j) {
        ra[i * g.n() + j] = g.A()(i, j);
        rb[i * g.n() + j] = g.B()(i, j);
        lp.objective[i * g.n() + j] = g.A()(i, j) + g.B()(i, j);
      }
    }
    lp.add(std::move(ones), Relation::Equal, 1);
    lp.add(std::move(ra), Relation::GreaterEq, e.alpha);
    lp.add(std::move(rb), Relation::GreaterEq, e.beta);
    LpOutcome out = solve_lp(lp);
    if (out.optimal() && out.value == e.alpha + e.beta) {
      r.verdict = AcoopVerdict::Yes;
      r.pareto_optimal = e;
      r.note = "twisted equilibrium certified Pareto-optimal by the payoff hull";
      return r;
    }
  }
  if (all_dominated && twisted.complete) {
    r.verdict = AcoopVerdict::No;
    r.note = "every twisted equilibrium is dominated by a pure profile";
  } else {
    r.note = all_dominated ? "twisted equilibrium set incomplete" : "Pareto-optimality not decided by the certificates";
  }
  return r;
}

AcoopResult classify_acoop(const Game& g, std::size_t enum_bound) {
  return classify_acoop(g, twisted_equilibria(g, enum_bound));
}

ClassificationReport classify(const Game& g, const ClassifyOptions& opts) {
  ClassificationReport r;
  r.player_I = check_sufficient_conditions(g, Player::I, opts.enum_bound);
  r.player_II = check_sufficient_conditions(g, Player::II, opts.enum_bound);
  r.wuc = classify_wuc(g, opts.wuc);
  const NashSet nash = solve_nash(g, opts.enum_bound);
  const NashSet twisted = twisted_equilibria(g, opts.enum_bound);
  r.asc = classify_asc(g, nash, twisted);
  r.acoop = classify_acoop(g, twisted);
  if (g.m() + g.n() > opts.enum_bound) r.notes.push_back("cell enumeration for cond7/cond_alt skipped (bound)");
  for (const auto& n : nash.notes) r.notes.push_back("nash: " + n);
  for (const auto& n : twisted.notes) r.notes.push_back("twisted: " + n);
  return r;
}

}  // namespace leadsolve
