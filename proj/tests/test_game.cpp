#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "leadsolve/game.hpp"
#include "leadsolve/iesds.hpp"
#include "leadsolve/io.hpp"
#include "support.hpp"

using namespace leadsolve;
using testing::R;

namespace {

// Points strictly inside the intervals cut out of (0, 1) by the column ties
// of a two-row game. The best reply set is constant on each interval.
std::vector<Rational> interval_midpoints(const Game& g) {
  std::set<Rational> cuts{0, 1};
  for (std::size_t j = 0; j < g.n(); ++j) {
    for (std::size_t k = j + 1; k < g.n(); ++k) {
      // (1 - t) B0j + t B1j = (1 - t) B0k + t B1k
      const Rational p = g.B()(0, j) - g.B()(0, k);
      const Rational q = g.B()(1, j) - g.B()(1, k);
      if (p != q) {
        const Rational t = p / (p - q);
        if (t > 0 && t < 1) cuts.insert(t);
      }
    }
  }
  std::vector<Rational> v(cuts.begin(), cuts.end()), mids;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) mids.push_back((v[i] + v[i + 1]) / 2);
  return mids;
}

MixedStrategy two_row(const Rational& t) { return MixedStrategy(Player::I, {1 - t, t}); }

bool strictly_dominates(const Game& g, Player who, const MixedStrategy& w, std::size_t s) {
  const RatMatrix own = who == Player::I ? g.A() : g.B().transposed();
  for (std::size_t c = 0; c < own.cols(); ++c) {
    Rational mix = 0;
    for (std::size_t r = 0; r < own.rows(); ++r) mix += w[r] * own(r, c);
    if (!(mix > own(s, c))) return false;
  }
  return w[s].is_zero();
}

}  // namespace

TEST_SUITE("game_core") {

TEST_CASE("default labels and role transformations") {
  const Game g({{4, 1}, {3, 2}}, {{1, 2}, {4, 3}});
  CHECK(g.row_labels() == std::vector<std::string>{"1", "2"});
  CHECK(g.col_labels() == std::vector<std::string>{"3", "4"});
  const Game t = g.transposed_roles();
  CHECK(t.A() == g.B().transposed());
  CHECK(t.B() == g.A().transposed());
  CHECK(t.row_labels() == g.col_labels());
  CHECK(t.transposed_roles() == g);
  const Game tw = g.twisted();
  CHECK(tw.A() == -g.B());
  CHECK(tw.B() == -g.A());
  const Game r = g.restricted({1}, {0, 1});
  CHECK(r.m() == 1);
  CHECK(r.row_labels() == std::vector<std::string>{"2"});
  CHECK_THROWS_AS(Game({{1, 2}}, {{1}, {2}}), StructuralError);
}

TEST_CASE("mixed strategies are validated, never renormalized") {
  CHECK_THROWS_AS(MixedStrategy(Player::I, {R(1, 2), R(1, 3)}), StructuralError);
  CHECK_THROWS_AS(MixedStrategy(Player::I, {R(3, 2), R(-1, 2)}), StructuralError);
  const MixedStrategy x(Player::II, {0, R(4, 5), R(1, 5)});
  CHECK(x.support() == std::vector<std::size_t>{1, 2});
  CHECK_FALSE(x.is_pure());
  CHECK(MixedStrategy::uniform(Player::I, 4)[3] == R(1, 4));
}

TEST_CASE("payoffs and best replies") {
  const Game g({{-3, 2}, {1, -3}, {0, 3}}, {{0, 0}, {1, 2}, {3, -1}});
  const MixedStrategy x(Player::I, {0, R(4, 5), R(1, 5)});
  const MixedStrategy y(Player::II, {R(6, 7), R(1, 7)});
  CHECK(payoff(g, x, y, Player::I) == R(3, 7));
  CHECK(payoff(g, x, y, Player::II) == R(7, 5));
  CHECK(pure_best_replies(g, MixedStrategy::pure(Player::I, 3, 0)) == std::vector<std::size_t>{0, 1});
  CHECK(pure_best_replies(g, x) == std::vector<std::size_t>{0, 1});
  CHECK(pure_best_replies(g, y) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("best reply regions of a 2x2 game") {
  const Game g({{3, 10}, {1, 9}}, {{3, 1}, {8, 9}});
  const BestReplyRegion x3 = best_reply_region(g, 0);
  REQUIRE(x3.vertices);
  CHECK(*x3.vertices == std::vector<RatVector>{{R(1, 3), R(2, 3)}, {1, 0}});
  CHECK(x3.full_dimensional);
  const BestReplyRegion x4 = best_reply_region(g, 1);
  REQUIRE(x4.vertices);
  CHECK(*x4.vertices == std::vector<RatVector>{{0, 1}, {R(1, 3), R(2, 3)}});
  CHECK(x3.contains({R(1, 2), R(1, 2)}));
  CHECK_FALSE(x3.contains({R(1, 4), R(3, 4)}));
}

TEST_CASE("regions of the 3x3 example") {
  const Game g({{4, 1, 0}, {3, 2, 0}, {0, 0, R(7, 2)}}, {{1, 2, 0}, {4, 3, 0}, {0, 0, 1}});
  for (std::size_t j = 0; j < 3; ++j) {
    const BestReplyRegion reg = best_reply_region(g, j);
    REQUIRE(reg.vertices);
    CHECK(reg.full_dimensional);
    for (const auto& v : *reg.vertices) {
      CHECK(sum(v) == R(1));
      const auto br = pure_best_replies(g, MixedStrategy(Player::I, v));
      CHECK(std::find(br.begin(), br.end(), j) != br.end());
    }
  }
}

TEST_CASE("D: dominated and payoff-equivalent columns") {
  const Game g4231({{4, 2}, {3, 1}}, {{1, 2}, {0, 0}});
  const DSet d = compute_D(g4231);
  CHECK(d.members == std::vector<std::size_t>{1});
  CHECK(d.weakly_dominated == std::vector<std::size_t>{0});
  CHECK(d.matches_covered);
  CHECK(d.matches_weak_dominance);
  // Duplicated column: both copies stay in D and E(j) has two members.
  const Game dup({{1, 2, 0}, {0, 1, 3}}, {{1, 1, 0}, {0, 0, 2}});
  const DSet dd = compute_D(dup);
  CHECK(dd.members == std::vector<std::size_t>{0, 1, 2});
  CHECK(payoff_equivalent_class(dup, 1) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("D agrees with an interval oracle on random 2xn games") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 300; ++k) {
    const Game g = testing::random_game(rng, 2, 2 + k % 3, -4, 4);
    std::set<std::size_t> oracle;
    for (const auto& t : interval_midpoints(g)) {
      for (std::size_t j : pure_best_replies(g, two_row(t))) oracle.insert(j);
    }
    const DSet d = compute_D(g);
    CAPTURE(k);
    CHECK(std::set<std::size_t>(d.members.begin(), d.members.end()) == oracle);
    CHECK(d.matches_covered);
  }
}

TEST_CASE("degeneracy") {
  const Game ex2({{-3, 2}, {1, -3}, {0, 3}}, {{0, 0}, {1, 2}, {3, -1}});
  const DegeneracyResult r = degenerate_for(ex2, Player::I);
  CHECK(r.degenerate());
  REQUIRE(r.witness);
  CHECK(pure_best_replies(ex2, *r.witness).size() > r.witness->support().size());
  CHECK(degenerate_for(Game({{4, 1}, {3, 2}}, {{1, 2}, {4, 3}}), Player::I).status == DegeneracyStatus::NonDegenerate);
  // 2x2: degenerate for I exactly when a row of B has a tie.
  std::mt19937_64 rng(5);
  for (int k = 0; k < 500; ++k) {
    const Game g = testing::random_game(rng, 2, 2, -2, 2);
    const bool tie = g.B()(0, 0) == g.B()(0, 1) || g.B()(1, 0) == g.B()(1, 1);
    CHECK(degenerate_for(g, Player::I).degenerate() == tie);
    CHECK(degenerate_for(g, Player::I, 3).status == DegeneracyStatus::Unchecked);
  }
}

TEST_CASE("dominance witnesses dominate") {
  const Game g4231({{4, 2}, {3, 1}}, {{1, 2}, {0, 0}});
  const DominanceResult s2 = dominance_check(g4231, Player::I, 1);
  CHECK(s2.kind == DominanceKind::Strong);
  REQUIRE(s2.witness);
  CHECK(strictly_dominates(g4231, Player::I, *s2.witness, 1));
  // Dominated only by a mixture: (0, 0) vs 1/2 (3, -1) + 1/2 (-1, 3).
  const Game mix({{3, -1}, {-1, 3}, {0, 0}}, {{0, 0}, {0, 0}, {0, 0}});
  const DominanceResult s3 = dominance_check(mix, Player::I, 2);
  CHECK(s3.kind == DominanceKind::Strong);
  REQUIRE(s3.witness);
  CHECK(strictly_dominates(mix, Player::I, *s3.witness, 2));
  CHECK(dominance_check(mix, Player::I, 0).kind == DominanceKind::None);
}

TEST_CASE("iesds is order independent") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 200; ++k) {
    const Game g = testing::random_small_game(rng);
    const IesdsResult a = iesds(g);
    const IesdsResult b = iesds(g, IesdsOrder::OneAtATimeReversed);
    CAPTURE(k);
    CHECK(a.surviving_rows == b.surviving_rows);
    CHECK(a.surviving_cols == b.surviving_cols);
    for (const auto& round : a.rounds) {
      for (const auto& e : round) CHECK(e.dominator[e.strategy].is_zero());
    }
  }
}

TEST_CASE("game documents") {
  const Game g = parse_game(R"({"name": "t", "rows": ["up", 2], "A": [[1, "1/2"], [0.25, -3]],
                                "B": [["-7/14", 0], [1.5, 123456789012345678901234567890]]})");
  CHECK(g.name() == "t");
  CHECK(g.row_labels() == std::vector<std::string>{"up", "2"});
  CHECK(g.col_labels() == std::vector<std::string>{"3", "4"});
  CHECK(g.A()(0, 1) == R(1, 2));
  CHECK(g.A()(1, 0) == R(1, 4));
  CHECK(g.B()(0, 0) == R(-1, 2));
  CHECK(g.B()(1, 1).str() == "123456789012345678901234567890");
  CHECK(parse_game(R"({"A": [[0.1]], "B": [[0.3]]})").A()(0, 0) == R(1, 10));
  CHECK(parse_game(render_game(g)) == g);
}

TEST_CASE("malformed game documents name the location") {
  auto message = [](const char* text) -> std::string {
    try {
      parse_game(text, "in.game");
    } catch (const std::exception& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message(R"({"A": [[1, 2], [3]], "B": [[1, 2], [3, 4]]})").find("A[1]") != std::string::npos);
  CHECK(message(R"({"A": [[1, "x"]], "B": [[1, 2]]})").find("A[0][1]") != std::string::npos);
  CHECK(message(R"({"A": [[1, 2]], "B": [[1, 2], [3, 4]]})").find("1x2") != std::string::npos);
  CHECK(message(R"({"A": [[1e3]], "B": [[1]]})").find("A[0][0]") != std::string::npos);
  CHECK(message(R"({"A": [[1]], "B": [[1]], "C": 0})").find("unknown field") != std::string::npos);
  CHECK(message(R"({"A": [[1]]})").find("missing field B") != std::string::npos);
  CHECK(message(R"({"A": [[1]], "B": [[true]]})").find("B[0][0]") != std::string::npos);
  CHECK(message(R"({"A": [[1]], "B": [[1]], "rows": ["a", "b"]})").find("rows") != std::string::npos);
  CHECK(message("{\"A\": [[1]], ").find("in.game") != std::string::npos);
  CHECK_THROWS_AS(parse_game(R"({"A": [[1, 2], [3]], "B": [[1, 2], [3, 4]]})"), StructuralError);
  CHECK_THROWS_AS(parse_game(R"({"A": [[1, "1/0"]], "B": [[1, 2]]})"), ParseError);
  CHECK_THROWS_AS(load_game("/nonexistent/x.game"), ParseError);
}

}  // TEST_SUITE
