// Acceptance run: one PASS/FAIL line per criterion. Arguments select
// criteria by number (default: all). Exit status 1 if any selected one fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "leadsolve/classify.hpp"
#include "leadsolve/commitment.hpp"
#include "leadsolve/io.hpp"
#include "leadsolve/trd.hpp"
#include "leadsolve/two_by_two.hpp"
#include "support.hpp"

using namespace leadsolve;
using testing::R;

namespace {

constexpr std::uint64_t kCorpusSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

Game load(const std::string& name) { return load_game(std::string(LEADSOLVE_GAMES) + "/" + name + ".game"); }

std::vector<Game> corpus() {
  std::mt19937_64 rng(kCorpusSeed);
  std::vector<Game> out;
  for (int k = 0; k < 1000; ++k) out.push_back(testing::random_small_game(rng));
  return out;
}

const std::vector<Game>& shared_corpus() {
  static const std::vector<Game> c = corpus();
  return c;
}

bool pure_nash(const Game& g, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < g.m(); ++k)
    if (g.A()(k, j) > g.A()(i, j)) return false;
  for (std::size_t k = 0; k < g.n(); ++k)
    if (g.B()(i, k) > g.B()(i, j)) return false;
  return true;
}

const LeaderWitness* find_witness(const CommitmentValue& v, const RatVector& x, std::size_t follower) {
  for (const auto& w : v.witnesses)
    if (w.x.weights() == x && w.follower == follower) return &w;
  return nullptr;
}

std::string describe_witnesses(const Game& g, const CommitmentValue& v) {
  std::string s;
  for (const auto& w : v.witnesses) {
    const Player f = opponent(w.x.owner());
    s += (s.empty() ? "" : "; ") + describe(g, w.x) + " -> " + (f == Player::I ? "s" : "t") + g.label(f, w.follower) +
         " with payoffs (" + w.leader_payoff.str() + ", " + w.follower_payoff.str() + ")";
  }
  return s;
}

// ---------------------------------------------------------------------------
// 1. Example regression suite

Outcome criterion1() {
  Outcome o;
  int items = 0;
  auto item = [&](bool ok, const std::string& what) {
    ++items;
    o.expect(ok, what);
  };

  {
    const Game g = load("3x3");
    const LeaderReport r = leader_report(g, Player::I);
    item(r.low.value == R(7, 2) && r.high.value == R(7, 2), "3x3: alpha^L = alpha^H = 7/2");
    item(find_witness(r.low, {R(1, 2), R(1, 2), 0}, 0) && find_witness(r.low, {0, 0, 1}, 2),
         "3x3: witnesses (1/2,1/2,0) -> t4 and s3 -> t6");
  }
  {
    const Game g = load("example2");
    const NashSet ne = solve_nash(g);
    const MixedStrategy x(Player::I, {0, R(4, 5), R(1, 5)}), y(Player::II, {R(6, 7), R(1, 7)});
    item(ne.equilibria.size() == 1 && ne.contains(x, y) && ne.equilibria[0].alpha == R(3, 7) &&
             ne.equilibria[0].beta == R(7, 5),
         "example 2: unique NE ((0,4/5,1/5),(6/7,1/7)) with payoffs (3/7,7/5)");
    const CommitmentValue low = alpha_low(g, Player::I);
    item(low.value == R(2) && find_witness(low, {1, 0, 0}, 1), "example 2: alpha^L = 2 at (s1,t5)");
    item(!pure_nash(g, 0, 1), "example 2: (s1,t5) is not an NE");
  }
  {
    const SufficientConditions c = check_sufficient_conditions(load("relaxed-not-sufficient"), Player::I);
    item(c.cond6 && !c.cond5, "relaxed condition example: cond6 and not cond5");
  }
  {
    const Game a = load("wuc-degenerate"), b = load("alternative-2x3");
    item(alpha_low(a, Player::I).value == R(-1) && alpha_high(a, Player::I).value == R(2),
         "degenerate wuc example: (alpha^L, alpha^H) = (-1, 2)");
    item(alpha_low(b, Player::I).value == R(3) && alpha_high(b, Player::I).value == R(3),
         "alternative condition example: (alpha^L, alpha^H) = (3, 3)");
  }
  {
    const Game g = load("conitzer");
    const NashSet ne = solve_nash(g);
    item(ne.equilibria.size() == 1 && pure_nash(g, 1, 1) && ne.equilibria[0].alpha == R(0) &&
             ne.equilibria[0].beta == R(0),
         "example 4: NE (s2,t4) with payoffs (0,0)");
    const CommitmentValue low = alpha_low(g, Player::I);
    const LeaderWitness* w = find_witness(low, {R(1, 2), R(1, 2)}, 0);
    const Equalizers eq = equalizers(g);
    item(w && low.value == R(5, 2) && w->follower_payoff == R(1, 2) && eq.xd &&
             eq.xd->weights() == RatVector{R(1, 2), R(1, 2)},
         "example 4: commitment (x^d = (1/2,1/2), t3) with payoffs (5/2,1/2)");
  }
  {
    const Game g = load("31019"), gp = load("31019-prime");
    const CommitmentValue v = alpha_low(g, Player::I), vp = alpha_low(gp, Player::I);
    const LeaderWitness* w = find_witness(v, {R(1, 3), R(2, 3)}, 1);
    item(w && v.value == R(28, 3) && w->follower_payoff == R(19, 3), "31019: ((1/3,2/3),t4) with (28/3,19/3)");
    const LeaderWitness* wp = find_witness(vp, {1, 0}, 0);
    item(wp && vp.value == R(3) && wp->follower_payoff == R(3), "31019': (s1,t3) with (3,3)");
  }
  {
    const Game g = load("4231");
    const CommitmentValue low = alpha_low(g, Player::I), high = alpha_high(g, Player::I);
    item(low.value == R(2) && high.value == R(3) && find_witness(high, {0, 1}, 0) &&
             dominance_check(g, Player::I, 1).kind == DominanceKind::Strong,
         "4231: alpha^L = 2, alpha^H = 3 at s2, s2 strongly dominated");
  }
  {
    const Game g = load("4132");
    const NashSet ne = solve_nash(g);
    item(ne.equilibria.size() == 1 && ne.equilibria[0].alpha == R(5, 2) && ne.equilibria[0].beta == R(5, 2),
         "4132: NE payoffs (5/2,5/2)");
    item(alpha_low(g, Player::I).value == R(7, 2) && alpha_low(g, Player::II).value == R(7, 2),
         "4132: commitment value 7/2 for both leaders");
  }
  {
    const Game g = load("2x3-outside-ne");
    const CommitmentValue l1 = alpha_low(g, Player::I);
    const LeaderWitness* w1 = find_witness(l1, {R(1, 3), R(2, 3)}, 0);
    item(w1 && l1.value == R(5, 3) && w1->follower_payoff == R(4, 3) && !is_nash_strategy(g, w1->x),
         "final 2x3, leader I: ((1/3,2/3),t3) with (5/3,4/3), x^L not in NE(X)");
    const CommitmentValue l2 = alpha_low(g, Player::II);
    const LeaderWitness* w2 = find_witness(l2, {R(1, 2), R(1, 2), 0}, 0);
    std::ostringstream why;
    why << "final 2x3, leader II: expected ((1/2,1/2,0),s1) with (1/2,5/2); computed beta^L = " << l2.value
        << " at " << describe_witnesses(g, l2)
        << ". Against (1/2,1/2,0) player II earns -3/2 from s1 and 1/2 from s2, and (0,1/3,2/3)"
           " lies in the region of s2 with payoff 2/3 > 1/2, so the stated value is not optimal";
    item(w2 && l2.value == R(1, 2) && w2->follower_payoff == R(5, 2), why.str());
    bool outside = true;
    for (const auto& w : l2.witnesses) outside = outside && !is_nash_strategy(g, w.x);
    item(outside, "final 2x3, leader II: y^L not in NE(Y)");
  }
  o.summary = std::to_string(items - static_cast<int>(o.failures.size())) + "/" + std::to_string(items) +
              " example checks";
  return o;
}

// ---------------------------------------------------------------------------
// 2. Traveler's Dilemma

Outcome criterion2() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const TrdSolution s = solve_trd({100});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const Game& g = s.game;
  const LeaderReport& r = s.leader;
  o.expect(r.low.value == R(295, 3), "alpha^L = 295/3, got " + r.low.value.str());
  bool found = false;
  for (const auto& w : r.low.witnesses) {
    RatVector x(g.m());
    for (int c : {97, 99, 100}) x[trd_index(c)] = R(1, 3);
    if (w.x.weights() == x && w.follower == trd_index(99) && w.follower_payoff == R(295, 3)) found = true;
  }
  o.expect(found, "x^L = 1/3 on {97, 99, 100} with j^F = 99 and beta^F = 295/3");
  o.expect(s.iesds.surviving_rows == std::vector<std::size_t>{trd_index(2)} &&
               s.iesds.surviving_cols == std::vector<std::size_t>{trd_index(2)},
           "iesds leaves (2,2)");
  o.expect(s.nash.complete && s.nash.equilibria.size() == 1 && s.nash.equilibria[0].alpha == R(2) &&
               s.nash.equilibria[0].beta == R(2),
           "unique NE (2,2)");
  o.expect(s.saddle.complete && s.saddle.points.size() == 1 &&
               s.saddle.points[0].x == MixedStrategy::pure(Player::I, g.m(), trd_index(2)) &&
               s.saddle.points[0].y == MixedStrategy::pure(Player::II, g.n(), trd_index(2)),
           "S = {(2,2)}");
  bool te = !s.twisted.equilibria.empty();
  for (const auto& e : s.twisted.equilibria) te = te && e.alpha == R(2) && e.beta == R(2);
  o.expect(te, "TE payoffs = {(2,2)}");
  o.expect(s.asc.verdict == AscVerdict::Yes, "almost strictly competitive");
  // (100,100)+(98,98) and (100,100)+(97,97) are CCEs worth 99 and 98.5; (100,100) is not.
  o.expect(s.cce.size() == 3, "three CCE checks");
  if (s.cce.size() == 3) {
    o.expect(s.cce[0].check.ok && s.cce[0].check.value_I == R(99) && s.cce[0].check.value_II == R(99),
             "1/2 (100,100) + 1/2 (98,98) is a CCE worth 99");
    o.expect(s.cce[1].check.ok && s.cce[1].check.value_I == R(197, 2), "1/2 (100,100) + 1/2 (97,97) is a CCE worth 98.5");
    o.expect(!s.cce[2].check.ok, "(100,100) is not a CCE");
  }
  o.expect(secs < 120, "wall clock under 120 s");
  std::ostringstream ss;
  ss << "alpha^L = " << r.low.value << ", j^F = " << (r.low.witnesses.empty() ? "?" : g.label(Player::II, r.low.witnesses[0].follower))
     << ", " << s.iesds.rounds.size() << " iesds rounds, " << static_cast<int>(secs) << " s";
  o.summary = ss.str();
  return o;
}

// ---------------------------------------------------------------------------
// 3. Bound chain

Outcome criterion3() {
  Outcome o;
  int nondeg = 0, checked = 0;
  const auto& games = shared_corpus();
  for (std::size_t k = 0; k < games.size(); ++k) {
    const Game& g = games[k];
    for (Player p : {Player::I, Player::II}) {
      const LeaderReport r = leader_report(g, p);
      const std::string tag = "game " + std::to_string(k) + " leader " + to_string(p) + ": ";
      if (!r.nash.checked || !r.nash_l || !r.nash_h) {
        o.expect(false, tag + "equilibria not enumerated");
        continue;
      }
      ++checked;
      const Rational &v = r.maximin.value, &l = *r.nash_l, &h = *r.nash_h;
      o.expect(v <= l && l <= h && h <= r.high.value, tag + "v <= l <= h <= alpha^H");
      o.expect(l <= r.low.value, tag + "l <= alpha^L");
      if (r.degeneracy == DegeneracyStatus::NonDegenerate) {
        ++nondeg;
        o.expect(r.low.value == r.high.value, tag + "alpha^L = alpha^H");
      }
      o.expect(r.degeneracy != DegeneracyStatus::Unchecked, tag + "degeneracy unchecked");
    }
  }
  o.summary = std::to_string(checked) + " (game, leader) pairs, " + std::to_string(nondeg) +
              " non-degenerate for the leader, " + std::to_string(o.failures.size()) + " violations";
  return o;
}

// ---------------------------------------------------------------------------
// 4. Pure commitment and completely mixed equilibria

Outcome criterion4() {
  Outcome o;
  int pure_checked = 0, mixed_checked = 0;
  const auto& games = shared_corpus();
  for (std::size_t k = 0; k < games.size(); ++k) {
    for (Player p : {Player::I, Player::II}) {
      const Game g = games[k].as_leader(p);  // leader is the row player
      const std::string tag = "game " + std::to_string(k) + " leader " + to_string(p) + ": ";
      const LeaderReport r = leader_report(g, Player::I);
      if (r.degeneracy != DegeneracyStatus::NonDegenerate) continue;
      for (const auto& w : r.low.witnesses) {
        if (!w.x.is_pure()) continue;
        ++pure_checked;
        o.expect(pure_nash(g, w.x.support()[0], w.follower), tag + "pure witness with j^F is not an NE");
      }
      if (check_pure_commitment_nash(g, r).verdict == PureCommitmentVerdict::Violated) {
        o.expect(false, tag + "pure commitment check reports a violation");
      }

      if (degenerate(g) != DegeneracyStatus::NonDegenerate || !r.nash.complete) continue;
      for (const auto& e : r.nash.equilibria) {
        if (!e.x.completely_mixed() || !e.y.completely_mixed()) continue;
        const RatVector col = g.A().left_multiply(e.x.weights());
        const Rational worst = *std::min_element(col.begin(), col.end());
        if (worst >= r.maximin.value) continue;  // x^N is maximin
        ++mixed_checked;
        bool ok = false;
        for (std::size_t j = 0; j < g.n(); ++j) ok = ok || (col[j] > e.alpha && r.low.value >= col[j]);
        o.expect(ok, tag + "no j1 with alpha(x^N, j1) > alpha^N and alpha^L >= alpha(x^N, j1)");
      }
      if (completely_mixed_improvement(g, r).verdict == MixedImprovementVerdict::Violated) {
        o.expect(false, tag + "completely mixed improvement check reports a violation");
      }
    }
  }
  o.summary = std::to_string(pure_checked) + " pure witnesses, " + std::to_string(mixed_checked) +
              " completely mixed non-maximin equilibria, " + std::to_string(o.failures.size()) + " violations";
  return o;
}

// ---------------------------------------------------------------------------
// 5. Closed forms vs LP pipeline, LP vs vertex enumeration

std::optional<RatVector> solve3(const RatMatrix& M, const RatVector& b) {
  auto det = [](const RatMatrix& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  };
  const Rational d = det(M);
  if (d.is_zero()) return std::nullopt;
  RatVector x(3);
  for (std::size_t c = 0; c < 3; ++c) {
    RatMatrix Mc = M;
    for (std::size_t r = 0; r < 3; ++r) Mc(r, c) = b[r];
    x[c] = det(Mc) / d;
  }
  return x;
}

// alpha^H = max_j max over the vertices of X(j) of alpha(x, j), m = 3.
Rational vertex_alpha_high(const Game& g) {
  std::optional<Rational> best;
  for (std::size_t j = 0; j < g.n(); ++j) {
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < 3; ++i) rows.push_back(unit_vector(3, i));
    for (std::size_t k = 0; k < g.n(); ++k) {
      if (k == j) continue;
      RatVector r(3);
      for (std::size_t i = 0; i < 3; ++i) r[i] = g.B()(i, j) - g.B()(i, k);
      rows.push_back(r);
    }
    auto feasible = [&](const RatVector& x) {
      for (const auto& r : rows)
        if (dot(r, x) < 0) return false;
      return true;
    };
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = a + 1; b < rows.size(); ++b) {
        RatMatrix M(3, 3);
        for (std::size_t i = 0; i < 3; ++i) {
          M(0, i) = 1;
          M(1, i) = rows[a][i];
          M(2, i) = rows[b][i];
        }
        const auto x = solve3(M, {1, 0, 0});
        if (!x || !feasible(*x)) continue;
        Rational v = 0;
        for (std::size_t i = 0; i < 3; ++i) v += (*x)[i] * g.A()(i, j);
        if (!best || v > *best) best = v;
      }
    }
  }
  return *best;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(kCorpusSeed + 5);
  int worse = 0;
  for (int k = 0; k < 10000; ++k) {
    const Game g = testing::random_game(rng, 2, 2);
    const TwoByTwoReport r = analyze_two_by_two(g);
    const std::string tag = "2x2 game " + std::to_string(k) + ": ";
    o.expect(r.agrees, tag + (r.disagreements.empty() ? "disagreement" : r.disagreements.front()));
    o.expect(r.prop6_case == r.generic_prop6_case, tag + "case label");
    o.expect(r.claims_hold, tag + "case claims");
    for (Player p : {Player::I, Player::II}) {
      const TwoByTwoLeader& l = r.leader(p);
      o.expect(l.closed.alpha_low == l.generic.alpha_low, tag + "alpha^L");
      o.expect(l.closed.alpha_high == l.generic.alpha_high, tag + "alpha^H");
      o.expect(l.follower.verdict == l.generic.follower, tag + "follower verdict");
      o.expect(l.follower.biconditional_holds, tag + "follower biconditional");
      if (l.follower.verdict == FollowerVerdict::FollowerWorse) ++worse;
    }
  }
  for (int k = 0; k < 200; ++k) {
    const Game g = testing::random_game(rng, 3, 3);
    const Rational lp = alpha_high(g, Player::I).value;
    const Rational oracle = vertex_alpha_high(g);
    o.expect(lp == oracle, "3x3 game " + std::to_string(k) + ": alpha^H " + lp.str() + " vs vertex oracle " +
                               oracle.str());
  }
  o.summary = "10000 2x2 games (" + std::to_string(worse) + " follower-worse leaders), 200 3x3 games, " +
              std::to_string(o.failures.size()) + " mismatches";
  return o;
}

// ---------------------------------------------------------------------------
// 6. Classifier soundness

bool breaks_definition(const Game& g, const WucWitness& w) {
  const auto& u1 = w.first.weights();
  const auto& u2 = w.second.weights();
  const auto& v = w.other.weights();
  const bool row = w.deviator == Player::I;
  auto pay = [&](const RatMatrix& M, const RatVector& own) { return row ? M.bilinear(own, v) : M.bilinear(v, own); };
  const RatMatrix& mine = row ? g.A() : g.B();
  const RatMatrix& theirs = row ? g.B() : g.A();
  const Rational d1 = pay(mine, u1), d2 = pay(mine, u2);
  const Rational o1 = pay(theirs, u1), o2 = pay(theirs, u2);
  return (d1 > d2 && o1 > o2) || (d1 < d2 && o1 < o2) || (d1 == d2 && o1 != o2);
}

Outcome criterion6() {
  Outcome o;
  int yes = 0, no = 0, unknown = 0;
  auto check_game = [&](const Game& g, const std::string& tag) {
    const WucResult r = classify_wuc(g);
    switch (r.verdict) {
      case WucVerdict::Yes:
        ++yes;
        for (Player p : {Player::I, Player::II}) {
          const Rational v = maximin(g, p).value;
          o.expect(alpha_low(g, p).value == v && alpha_high(g, p).value == v,
                   tag + ": wuc game with leader value != maximin for " + to_string(p));
        }
        break;
      case WucVerdict::No:
        ++no;
        o.expect(r.witness && breaks_definition(g, *r.witness) && verify_wuc_witness(g, *r.witness),
                 tag + ": witness does not re-verify");
        break;
      case WucVerdict::Unknown:
        ++unknown;
        break;
    }
  };
  const auto& games = shared_corpus();
  for (std::size_t k = 0; k < games.size(); ++k) check_game(games[k], "game " + std::to_string(k));

  std::mt19937_64 rng(kCorpusSeed + 6);
  int zs = 0;
  for (int k = 0; k < 300; ++k) {
    std::uniform_int_distribution<std::size_t> size(2, 4);
    const std::size_t m = size(rng), n = size(rng);
    const Game z = testing::zero_sum(testing::random_matrix(rng, m, n));
    const std::string tag = "zero-sum " + std::to_string(k);
    check_game(z, tag);
    ++zs;
    o.expect(classify_wuc(z).verdict == WucVerdict::Yes, tag + ": wuc not yes");
    o.expect(classify_asc(z).verdict == AscVerdict::Yes, tag + ": asc not yes");
    o.expect(classify_acoop(z).verdict == AcoopVerdict::Yes, tag + ": a-cooperative not yes");
  }
  o.summary = std::to_string(yes) + " yes / " + std::to_string(no) + " no / " + std::to_string(unknown) +
              " unknown wuc verdicts, " + std::to_string(zs) + " zero-sum games, " +
              std::to_string(o.failures.size()) + " violations";
  return o;
}

// ---------------------------------------------------------------------------
// 7. Monotonicity

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(kCorpusSeed + 7);
  std::uniform_int_distribution<int> d(-9, 9);
  std::uniform_int_distribution<std::size_t> size(2, 4);
  for (int k = 0; k < 500; ++k) {
    const Game g = testing::random_game(rng, size(rng), size(rng));
    RatVector a(g.n()), b(g.n());
    for (std::size_t j = 0; j < g.n(); ++j) {
      a[j] = d(rng);
      b[j] = d(rng);
    }
    const Game h(g.A().with_row(a), g.B().with_row(b));
    const std::string tag = "row pair " + std::to_string(k) + ": ";
    o.expect(alpha_low(h, Player::I).value >= alpha_low(g, Player::I).value, tag + "alpha^L decreased");
    o.expect(alpha_high(h, Player::I).value >= alpha_high(g, Player::I).value, tag + "alpha^H decreased");
    o.expect(maximin(h, Player::I).value >= maximin(g, Player::I).value, tag + "v_A decreased");
  }
  for (int k = 0; k < 500; ++k) {
    const Game g = testing::random_game(rng, size(rng), size(rng));
    RatVector a(g.m()), b(g.m());
    for (std::size_t i = 0; i < g.m(); ++i) {
      a[i] = d(rng);
      b[i] = d(rng);
    }
    const Game h(g.A().with_column(a), g.B().with_column(b));
    o.expect(maximin(h, Player::I).value <= maximin(g, Player::I).value,
             "column pair " + std::to_string(k) + ": v_A increased");
  }
  o.summary = "500 row pairs, 500 column pairs, " + std::to_string(o.failures.size()) + " violations";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7};
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  bool all = true;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const int id = static_cast<int>(c) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[c]();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.summary << " ["
              << static_cast<int>(secs + 0.5) << " s]\n";
    const std::size_t shown = std::min<std::size_t>(o.failures.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) std::cout << "    " << o.failures[i] << "\n";
    if (o.failures.size() > shown) std::cout << "    ... " << o.failures.size() - shown << " more\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
