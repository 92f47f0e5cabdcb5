#ifndef LEADSOLVE_TESTS_SUPPORT_HPP
#define LEADSOLVE_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "leadsolve/game.hpp"

namespace testing {

using leadsolve::Game;
using leadsolve::RatMatrix;
using leadsolve::Rational;
using leadsolve::RatVector;

inline Rational R(long p, long q = 1) { return Rational(p, q); }

inline RatMatrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> d(lo, hi);
  RatMatrix out(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = d(rng);
  return out;
}

inline Game random_game(std::mt19937_64& rng, std::size_t m, std::size_t n, int lo = -9, int hi = 9) {
  RatMatrix a = random_matrix(rng, m, n, lo, hi);
  RatMatrix b = random_matrix(rng, m, n, lo, hi);
  return Game(std::move(a), std::move(b));
}

/// Sizes 2x2 .. 4x4, payoffs in [-9, 9].
inline Game random_small_game(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(2, 4);
  const std::size_t m = size(rng);
  const std::size_t n = size(rng);
  return random_game(rng, m, n);
}

inline Game zero_sum(const RatMatrix& a) { return Game(a, -a); }

inline RatVector row(const RatMatrix& m, std::size_t r) { return RatVector(m.row(r).begin(), m.row(r).end()); }

}  // namespace testing

#endif  // LEADSOLVE_TESTS_SUPPORT_HPP
