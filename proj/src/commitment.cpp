#include "leadsolve/commitment.hpp"

#include <algorithm>
#include <numeric>

#include "leadsolve/lp.hpp"

namespace leadsolve {

const char* to_string(PureCommitmentVerdict v) {
  switch (v) {
    case PureCommitmentVerdict::Confirmed: return "confirmed";
    case PureCommitmentVerdict::Violated: return "violated";
    case PureCommitmentVerdict::NotApplicable: return "not-applicable";
    case PureCommitmentVerdict::NoPureWitness: return "no-pure-witness";
  }
  return "?";
}

const char* to_string(MixedImprovementVerdict v) {
  switch (v) {
    case MixedImprovementVerdict::Improvement: return "improvement";
    case MixedImprovementVerdict::Violated: return "violated";
    case MixedImprovementVerdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

// Columns ordered by the upper bound max_i A(i, j) (descending, then index).
// A column whose bound is below the best value found so far cannot attain it.
std::vector<std::size_t> columns_by_bound(const Game& gl, const std::vector<std::size_t>& cols,
                                          std::vector<Rational>& bound) {
  bound.assign(gl.n(), Rational());
  for (std::size_t j = 0; j < gl.n(); ++j) {
    bound[j] = gl.A()(0, j);
    for (std::size_t i = 1; i < gl.m(); ++i) bound[j] = std::max(bound[j], gl.A()(i, j));
  }
  std::vector<std::size_t> order = cols;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return bound[a] > bound[b]; });
  return order;
}

LeaderWitness make_witness(const Game& gl, Player leader, RatVector x, std::size_t region, std::size_t follower) {
  MixedStrategy xs(Player::I, std::move(x));
  LeaderWitness w{MixedStrategy(leader, xs.weights()), region, follower, {}, {}, {}, false};
  RatVector ax = gl.A().left_multiply(xs.weights());
  RatVector bx = gl.B().left_multiply(xs.weights());
  w.leader_payoff = ax[follower];
  w.follower_payoff = bx[follower];
  w.best_replies = pure_best_replies(gl, xs);
  w.tie = w.best_replies.size() > 1;
  return w;
}

void keep_best(CommitmentValue& cv, bool& have, const Rational& value, LeaderWitness w) {
  if (!have || value > cv.value) {
    cv.value = value;
    cv.witnesses.clear();
    have = true;
  }
  if (value != cv.value) return;
  // Payoff equivalent columns solve the same program.
  for (const auto& other : cv.witnesses)
    if (other.follower == w.follower && other.x == w.x) return;
  cv.witnesses.push_back(std::move(w));
}

void sort_witnesses(CommitmentValue& cv) {
  std::sort(cv.witnesses.begin(), cv.witnesses.end(),
            [](const LeaderWitness& a, const LeaderWitness& b) { return a.region < b.region; });
}

}  // namespace

CommitmentValue alpha_high(const Game& g, Player leader) {
  const Game gl = g.as_leader(leader);
  const std::size_t m = gl.m();
  std::vector<std::size_t> all(gl.n());
  std::iota(all.begin(), all.end(), 0);
  std::vector<Rational> bound;
  CommitmentValue cv;
  bool have = false;
  for (std::size_t j : columns_by_bound(gl, all, bound)) {
    if (have && bound[j] < cv.value) break;
    LinearProgram lp(m, Sense::Maximize);
    for (std::size_t i = 0; i < m; ++i) lp.objective[i] = gl.A()(i, j);
    add_region_constraints(lp, gl, j);
    LpOutcome out = solve_lp(lp);
    ++cv.lps_solved;
    if (!out.optimal()) continue;
    keep_best(cv, have, out.value, make_witness(gl, leader, out.vertex, j, j));
  }
  sort_witnesses(cv);
  return cv;
}

CommitmentValue alpha_low(const Game& g, Player leader, const DSet* d) {
  const Game gl = g.as_leader(leader);
  const std::size_t m = gl.m();
  DSet local;
  if (d == nullptr) {
    local = compute_D(gl);
    d = &local;
  }
  std::vector<Rational> bound;
  CommitmentValue cv;
  bool have = false;
  for (std::size_t j : columns_by_bound(gl, d->members, bound)) {
    if (have && bound[j] < cv.value) break;
    const auto equivalent = payoff_equivalent_class(gl, j);
    LinearProgram lp(m + 1, Sense::Maximize);
    lp.objective[m] = 1;
    lp.set_free(m);
    add_region_constraints(lp, gl, j);
    for (std::size_t k : equivalent) {
      RatVector row(m + 1);
      for (std::size_t i = 0; i < m; ++i) row[i] = gl.A()(i, k);
      row[m] = -1;
      lp.add(std::move(row), Relation::GreaterEq, 0);
    }
    LpOutcome out = solve_lp(lp);
    ++cv.lps_solved;
    if (!out.optimal()) continue;
    RatVector x(out.vertex.begin(), out.vertex.begin() + static_cast<std::ptrdiff_t>(m));
    RatVector ax = gl.A().left_multiply(x);
    std::size_t follower = j;
    for (std::size_t k : equivalent) {
      if (ax[k] == out.value) {
        follower = k;
        break;
      }
    }
    keep_best(cv, have, out.value, make_witness(gl, leader, std::move(x), j, follower));
  }
  sort_witnesses(cv);
  return cv;
}

LeaderReport leader_report(const Game& g, Player leader, const ReportOptions& opts) {
  const Game gl = g.as_leader(leader);
  LeaderReport r{.leader = leader, .maximin = maximin(g, leader)};
  r.d = compute_D(gl);
  r.low = alpha_low(g, leader, &r.d);
  r.high = alpha_high(g, leader);
  if (!opts.skip_degeneracy) r.degeneracy = degenerate_for(g, leader, opts.enum_bound).status;
  if (opts.with_nash) {
    r.nash = opts.nash != nullptr ? *opts.nash : solve_nash(g, opts.enum_bound);
    if (r.nash.checked) {
      const NashSet view = leader == Player::I ? r.nash : swap_roles(r.nash);
      r.nash_l = view.l;
      r.nash_h = view.h;
    }
  }

  const Rational& v = r.maximin.value;
  const Rational& aL = r.low.value;
  const Rational& aH = r.high.value;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) {
      r.chain_ok = false;
      r.chain_failures.push_back(what);
    }
  };
  expect(v <= aL, "v <= alpha^L");
  expect(aL <= aH, "alpha^L <= alpha^H");
  if (r.nash_l && r.nash_h) {
    expect(v <= *r.nash_l, "v <= l");
    expect(*r.nash_l <= aL, "l <= alpha^L");
    expect(*r.nash_l <= *r.nash_h, "l <= h");
    expect(*r.nash_h <= aH, "h <= alpha^H");
  }
  if (r.degeneracy == DegeneracyStatus::NonDegenerate) {
    expect(aL == aH, "alpha^L = alpha^H (non-degenerate for the leader)");
    if (r.nash_h) expect(*r.nash_h <= aL, "h <= alpha^L (non-degenerate for the leader)");
  }
  return r;
}

PureCommitmentCheck check_pure_commitment_nash(const Game& g, const LeaderReport& report) {
  const Game gl = g.as_leader(report.leader);
  PureCommitmentCheck check;
  auto add = [&](std::size_t i, std::size_t j) {
    for (const auto& it : check.items)
      if (it.leader_strategy == i && it.follower_strategy == j) return;
    bool nash = is_nash(gl, MixedStrategy::pure(Player::I, gl.m(), i), MixedStrategy::pure(Player::II, gl.n(), j));
    check.items.push_back({i, j, nash});
  };
  for (const auto& w : report.low.witnesses) {
    if (w.x.is_pure()) add(w.x.support().front(), w.follower);
  }
  if (report.degeneracy == DegeneracyStatus::NonDegenerate) {
    // Non-degenerate for the leader: each pure strategy has one best reply,
    // so every pure commitment optimal strategy is found by a direct scan.
    for (std::size_t i = 0; i < gl.m(); ++i) {
      auto br = pure_best_replies(gl, MixedStrategy::pure(Player::I, gl.m(), i));
      if (br.size() == 1 && report.d.contains(br[0]) && gl.A()(i, br[0]) == report.low.value) add(i, br[0]);
    }
  }
  if (check.items.empty()) {
    check.verdict = PureCommitmentVerdict::NoPureWitness;
  } else if (report.degeneracy != DegeneracyStatus::NonDegenerate) {
    check.verdict = PureCommitmentVerdict::NotApplicable;
  } else {
    bool all = std::all_of(check.items.begin(), check.items.end(), [](const auto& it) { return it.is_nash; });
    check.verdict = all ? PureCommitmentVerdict::Confirmed : PureCommitmentVerdict::Violated;
  }
  return check;
}

MixedImprovementCheck completely_mixed_improvement(const Game& g, const LeaderReport& report,
                                                   std::size_t enum_bound) {
  MixedImprovementCheck c;
  const DegeneracyStatus deg = degenerate(g, enum_bound);
  if (deg != DegeneracyStatus::NonDegenerate) {
    c.reason = deg == DegeneracyStatus::Degenerate ? "game is degenerate" : "degeneracy unchecked";
    return c;
  }
  if (!report.nash.complete) {
    c.reason = "equilibrium set not enumerated completely";
    return c;
  }
  const Game gl = g.as_leader(report.leader);
  const NashSet view = report.leader == Player::I ? report.nash : swap_roles(report.nash);
  const NashEquilibrium* mixed = nullptr;
  for (const auto& e : view.equilibria) {
    if (e.x.completely_mixed() && e.y.completely_mixed()) {
      mixed = &e;
      break;
    }
  }
  if (mixed == nullptr) {
    c.reason = "no completely mixed equilibrium";
    return c;
  }
  c.equilibrium = *mixed;
  const RatVector ax = gl.A().left_multiply(mixed->x.weights());
  const RatVector bx = gl.B().left_multiply(mixed->x.weights());
  if (*std::min_element(ax.begin(), ax.end()) == report.maximin.value) {
    c.reason = "x^N is a maximin strategy";
    return c;
  }
  c.j1 = static_cast<std::size_t>(std::max_element(ax.begin(), ax.end()) - ax.begin());
  c.alpha_j1 = ax[c.j1];
  c.follower_indifferent = bx[c.j1] == mixed->beta;
  const bool ok = c.alpha_j1 > mixed->alpha && report.low.value >= c.alpha_j1;
  c.verdict = ok ? MixedImprovementVerdict::Improvement : MixedImprovementVerdict::Violated;
  if (!ok) c.reason = "alpha^L >= alpha(x^N, j1) > alpha^N fails";
  return c;
}

std::vector<WeightInterval> commitment_optimal_set_2row(const Game& g, Player leader, const LeaderReport& report) {
  const Game gl = g.as_leader(leader);
  if (gl.m() != 2) throw StructuralError("the leader must have exactly two pure strategies");
  std::vector<WeightInterval> out;
  for (std::size_t j : report.d.members) {
    LinearProgram lp(2, Sense::Minimize);
    lp.objective[1] = 1;
    add_region_constraints(lp, gl, j);
    for (std::size_t k : payoff_equivalent_class(gl, j)) {
      lp.add({gl.A()(0, k), gl.A()(1, k)}, Relation::GreaterEq, report.low.value);
    }
    LpOutcome lo = solve_lp(lp);
    if (!lo.optimal()) continue;
    lp.sense = Sense::Maximize;
    LpOutcome hi = solve_lp(lp);
    out.push_back({lo.value, hi.value});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  std::vector<WeightInterval> merged;
  for (const auto& iv : out) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

bool is_nash_strategy(const Game& g, const MixedStrategy& s) {
  if (s.owner() == Player::II) {
    return is_nash_strategy(g.transposed_roles(), MixedStrategy(Player::I, s.weights()));
  }
  if (s.size() != g.m()) throw StructuralError("strategy size does not match the game");
  const auto replies = pure_best_replies(g, s);
  const auto support = s.support();
  const std::size_t k = replies.size();
  LinearProgram lp(k + 1, Sense::Maximize);
  lp.set_free(k);
  RatVector simplex(k + 1, Rational(1));
  simplex[k] = 0;
  lp.add(std::move(simplex), Relation::Equal, 1);
  for (std::size_t i = 0; i < g.m(); ++i) {
    RatVector row(k + 1);
    for (std::size_t c = 0; c < k; ++c) row[c] = g.A()(i, replies[c]);
    row[k] = -1;
    bool in_support = std::find(support.begin(), support.end(), i) != support.end();
    lp.add(std::move(row), in_support ? Relation::Equal : Relation::LessEq, 0);
  }
  return solve_lp(lp).optimal();
}

}  // namespace leadsolve
