#include "leadsolve/iesds.hpp"

#include <algorithm>

namespace leadsolve {

namespace {

// Rows of `own` are the strategies of the player being reduced, columns the
// surviving opponent strategies.
bool best_reply_somewhere(const RatMatrix& own, std::size_t s) {
  for (std::size_t c = 0; c < own.cols(); ++c) {
    bool best = true;
    for (std::size_t k = 0; k < own.rows() && best; ++k) best = own(k, c) <= own(s, c);
    if (best) return true;
  }
  return false;
}

std::optional<std::size_t> pure_dominator(const RatMatrix& own, std::size_t s) {
  for (std::size_t k = 0; k < own.rows(); ++k) {
    if (k == s) continue;
    bool strict = true;
    for (std::size_t c = 0; c < own.cols() && strict; ++c) strict = own(k, c) > own(s, c);
    if (strict) return k;
  }
  return std::nullopt;
}

// Returns a dominating mixture (indices local to `own`) when s is strongly
// dominated in the current reduced game.
std::optional<RatVector> strongly_dominated(const Game& current, Player who, std::size_t s) {
  const RatMatrix own = who == Player::I ? current.A() : current.B().transposed();
  if (own.rows() < 2) return std::nullopt;
  // A strategy that is a best reply to some pure strategy is never strongly
  // dominated.
  if (best_reply_somewhere(own, s)) return std::nullopt;
  if (auto k = pure_dominator(own, s)) return unit_vector(own.rows(), *k);
  auto res = dominance_check(current, who, s);
  if (res.kind != DominanceKind::Strong) return std::nullopt;
  return res.witness->weights();
}

}  // namespace

IesdsResult iesds(const Game& g, IesdsOrder order) {
  std::vector<std::size_t> rows(g.m()), cols(g.n());
  for (std::size_t i = 0; i < g.m(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < g.n(); ++j) cols[j] = j;
  std::vector<std::vector<Elimination>> rounds;

  auto lift = [&](Player who, const RatVector& local) {
    const auto& idx = who == Player::I ? rows : cols;
    RatVector full(who == Player::I ? g.m() : g.n());
    for (std::size_t k = 0; k < idx.size(); ++k) full[idx[k]] = local[k];
    return MixedStrategy(who, std::move(full));
  };

  for (;;) {
    Game current = g.restricted(rows, cols);
    std::vector<Elimination> round;
    std::vector<std::size_t> drop_rows, drop_cols;
    auto scan = [&](Player who, bool reversed) {
      const std::size_t count = who == Player::I ? rows.size() : cols.size();
      for (std::size_t t = 0; t < count; ++t) {
        const std::size_t s = reversed ? count - 1 - t : t;
        auto w = strongly_dominated(current, who, s);
        if (!w) continue;
        const auto& idx = who == Player::I ? rows : cols;
        round.push_back({who, idx[s], lift(who, *w)});
        (who == Player::I ? drop_rows : drop_cols).push_back(s);
        if (order == IesdsOrder::OneAtATimeReversed) return true;
      }
      return false;
    };
    if (order == IesdsOrder::Simultaneous) {
      scan(Player::I, false);
      scan(Player::II, false);
    } else if (!scan(Player::II, true)) {
      scan(Player::I, true);
    }
    if (round.empty()) break;
    auto erase = [](std::vector<std::size_t>& idx, std::vector<std::size_t> local) {
      std::sort(local.rbegin(), local.rend());
      for (auto s : local) idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(s));
    };
    erase(rows, drop_rows);
    erase(cols, drop_cols);
    rounds.push_back(std::move(round));
  }
  return {g.restricted(rows, cols), rows, cols, std::move(rounds)};
}

}  // namespace leadsolve
