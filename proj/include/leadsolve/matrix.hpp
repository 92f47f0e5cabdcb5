#ifndef LEADSOLVE_MATRIX_HPP
#define LEADSOLVE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "leadsolve/rational.hpp"

namespace leadsolve {

/// Thrown when shapes of vectors/matrices/games do not fit together.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using RatVector = std::vector<Rational>;

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational sum(std::span<const Rational> v);
RatVector unit_vector(std::size_t size, std::size_t index);
std::string to_string(std::span<const Rational> v);

/// Dense row-major rational matrix with uniform rows.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  RatVector column(std::size_t c) const;

  RatMatrix transposed() const;
  RatMatrix operator-() const;

  /// x^T M (length cols).
  RatVector left_multiply(std::span<const Rational> x) const;
  /// M y (length rows).
  RatVector right_multiply(std::span<const Rational> y) const;
  /// x^T M y.
  Rational bilinear(std::span<const Rational> x, std::span<const Rational> y) const;

  RatMatrix without_row(std::size_t r) const;
  RatMatrix without_column(std::size_t c) const;
  RatMatrix with_row(std::span<const Rational> values) const;
  RatMatrix with_column(std::span<const Rational> values) const;
  RatMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact solution of a square linear system; empty when singular.
std::optional<RatVector> solve_square(RatMatrix m, RatVector rhs);
std::size_t rank(RatMatrix m);

}  // namespace leadsolve

#endif  // LEADSOLVE_MATRIX_HPP
