#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "leadsolve/equilibria.hpp"
#include "support.hpp"

using namespace leadsolve;
using testing::R;

namespace {

// Mutual best replies, checked against every pure deviation.
bool oracle_nash(const Game& g, const RatVector& x, const RatVector& y) {
  const Rational a = g.A().bilinear(x, y), b = g.B().bilinear(x, y);
  for (const auto& v : g.A().right_multiply(y))
    if (v > a) return false;
  for (const auto& v : g.B().left_multiply(x))
    if (v > b) return false;
  return true;
}

using Profile = std::pair<RatVector, RatVector>;

std::set<std::pair<std::string, std::string>> profile_set(const std::vector<NashEquilibrium>& eqs) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& e : eqs) out.insert({to_string(e.x.weights()), to_string(e.y.weights())});
  return out;
}

// max over t in [0, 1] of min_j ((1 - t) A0j + t A1j), over the breakpoints.
Rational two_row_maximin(const RatMatrix& A) {
  std::vector<Rational> ts{0, 1};
  for (std::size_t j = 0; j < A.cols(); ++j) {
    for (std::size_t k = j + 1; k < A.cols(); ++k) {
      const Rational p = A(0, j) - A(0, k), q = A(1, j) - A(1, k);
      if (p != q) {
        const Rational t = p / (p - q);
        if (t >= 0 && t <= 1) ts.push_back(t);
      }
    }
  }
  std::optional<Rational> best;
  for (const auto& t : ts) {
    Rational worst = (1 - t) * A(0, 0) + t * A(1, 0);
    for (std::size_t j = 1; j < A.cols(); ++j) worst = std::min(worst, (1 - t) * A(0, j) + t * A(1, j));
    if (!best || worst > *best) best = worst;
  }
  return *best;
}

bool nondegenerate(const Game& g) { return degenerate(g) == DegeneracyStatus::NonDegenerate; }

}  // namespace

TEST_SUITE("equilibria") {

TEST_CASE("3x2 example: the unique equilibrium") {
  const Game g({{-3, 2}, {1, -3}, {0, 3}}, {{0, 0}, {1, 2}, {3, -1}});
  const NashSet s = solve_nash(g);
  REQUIRE(s.checked);
  REQUIRE(s.equilibria.size() == 1);
  const auto& e = s.equilibria.front();
  CHECK(e.x.weights() == RatVector{0, R(4, 5), R(1, 5)});
  CHECK(e.y.weights() == RatVector{R(6, 7), R(1, 7)});
  CHECK(e.alpha == R(3, 7));
  CHECK(e.beta == R(7, 5));
  CHECK(s.l == R(3, 7));
  CHECK(s.h == R(3, 7));
}

TEST_CASE("small examples") {
  const NashSet s4132 = solve_nash(Game({{4, 1}, {3, 2}}, {{1, 2}, {4, 3}}));
  REQUIRE(s4132.equilibria.size() == 1);
  CHECK(s4132.complete);
  CHECK(s4132.equilibria[0].x.weights() == RatVector{R(1, 2), R(1, 2)});
  CHECK(s4132.equilibria[0].alpha == R(5, 2));
  CHECK(s4132.equilibria[0].beta == R(5, 2));

  const Game ex4({{2, -1}, {3, 0}}, {{2, 1}, {-1, 0}});
  const NashSet s4 = solve_nash(ex4);
  REQUIRE(s4.equilibria.size() == 1);
  CHECK(s4.contains(MixedStrategy::pure(Player::I, 2, 1), MixedStrategy::pure(Player::II, 2, 1)));
  CHECK(s4.equilibria[0].alpha == R(0));

  const Game pd({{3, 0}, {4, 2}}, {{3, 4}, {0, 2}});
  const NashSet spd = solve_nash(pd);
  REQUIRE(spd.equilibria.size() == 1);
  CHECK(spd.method == NashMethod::Iesds);
  CHECK(spd.equilibria[0].alpha == R(2));
}

TEST_CASE("support enumeration and extreme equilibria agree on non-degenerate games") {
  std::mt19937_64 rng(101);
  int compared = 0;
  for (int k = 0; k < 150; ++k) {
    const Game g = testing::random_small_game(rng);
    if (!nondegenerate(g)) continue;
    ++compared;
    const auto se = support_enumeration(g);
    const auto ee = extreme_equilibria(g);
    CAPTURE(k);
    CHECK_FALSE(se.empty());
    CHECK(se.size() % 2 == 1);  // odd number of equilibria in non-degenerate games
    CHECK(profile_set(se) == profile_set(ee));
    for (const auto& e : se) {
      CHECK(oracle_nash(g, e.x.weights(), e.y.weights()));
      CHECK(is_nash(g, e.x, e.y));
    }
  }
  CHECK(compared > 30);
}

TEST_CASE("extreme equilibria of degenerate games are equilibria; iesds keeps them") {
  std::mt19937_64 rng(202);
  for (int k = 0; k < 150; ++k) {
    const Game g = testing::random_game(rng, 3, 3, -2, 2);
    const NashSet direct = nash_support_enumeration(g);
    const NashSet reduced = solve_nash(g);
    CAPTURE(k);
    REQUIRE(direct.checked);
    REQUIRE(reduced.checked);
    CHECK_FALSE(direct.equilibria.empty());
    for (const auto& e : direct.equilibria) CHECK(oracle_nash(g, e.x.weights(), e.y.weights()));
    for (const auto& e : reduced.equilibria) CHECK(oracle_nash(g, e.x.weights(), e.y.weights()));
    // Strongly dominated strategies are never played in equilibrium, so
    // both routes give the same range of leader payoffs.
    CHECK(direct.l == reduced.l);
    CHECK(direct.h == reduced.h);
  }
}

TEST_CASE("swapping roles permutes the equilibria") {
  std::mt19937_64 rng(303);
  for (int k = 0; k < 60; ++k) {
    const Game g = testing::random_small_game(rng);
    const NashSet a = swap_roles(solve_nash(g));
    const NashSet b = solve_nash(g.transposed_roles());
    CHECK(profile_set(a.equilibria) == profile_set(b.equilibria));
  }
}

TEST_CASE("maximin matches the two-row oracle and the minimax theorem") {
  std::mt19937_64 rng(404);
  for (int k = 0; k < 300; ++k) {
    const Game g = testing::random_game(rng, 2, 2 + k % 4);
    const MaximinResult r = maximin(g, Player::I);
    CHECK(r.value == two_row_maximin(g.A()));
    for (std::size_t j = 0; j < g.n(); ++j) {
      CHECK(g.A().bilinear(r.strategy.weights(), unit_vector(g.n(), j)) >= r.value);
    }
    const Game z = testing::zero_sum(g.A());
    CHECK(maximin(z, Player::I).value + maximin(z, Player::II).value == R(0));
  }
}

TEST_CASE("twisted equilibria and saddle points") {
  const Game mp({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}});
  const NashSet ne = solve_nash(mp);
  const NashSet te = twisted_equilibria(mp);
  REQUIRE(te.equilibria.size() == 1);
  CHECK(profile_set(ne.equilibria) == profile_set(te.equilibria));
  const SaddleSet sp = saddle_points(mp, ne, te);
  REQUIRE(sp.points.size() == 1);
  CHECK(is_saddle_point(mp, sp.points[0].x, sp.points[0].y));
  // Twisted payoffs are reported in the original game.
  const Game g({{4, 1}, {3, 2}}, {{1, 2}, {4, 3}});
  for (const auto& e : twisted_equilibria(g).equilibria) {
    CHECK(e.alpha == payoff(g, e.x, e.y, Player::I));
    CHECK(oracle_nash(g.twisted(), e.x.weights(), e.y.weights()));
  }
}

TEST_CASE("coarse correlated equilibria") {
  std::mt19937_64 rng(505);
  for (int k = 0; k < 50; ++k) {
    const Game g = testing::random_small_game(rng);
    const NashSet s = solve_nash(g);
    for (const auto& e : s.equilibria) {
      RatMatrix z(g.m(), g.n());
      for (std::size_t i = 0; i < g.m(); ++i)
        for (std::size_t j = 0; j < g.n(); ++j) z(i, j) = e.x[i] * e.y[j];
      const CceCheck c = verify_cce(g, z);
      CHECK(c.ok);
      CHECK(c.value_I == e.alpha);
      CHECK(c.value_II == e.beta);
    }
  }
  // Cooperation in the prisoner's dilemma is not a CCE.
  const Game pd({{3, 0}, {4, 2}}, {{3, 4}, {0, 2}});
  const CceCheck c = verify_cce(pd, RatMatrix{{1, 0}, {0, 0}});
  CHECK_FALSE(c.ok);
  CHECK(c.worst_I.strategy == 1);
  CHECK(c.worst_I.gain == R(1));
  CHECK_THROWS_AS(verify_cce(pd, RatMatrix{{1, 0}, {0, 1}}), StructuralError);
  CHECK_THROWS_AS(verify_cce(pd, RatMatrix{{2, -1}, {0, 0}}), StructuralError);
  CHECK_THROWS_AS(verify_cce(pd, RatMatrix{{1, 0}}), StructuralError);
}

}  // TEST_SUITE
