#include "leadsolve/matrix.hpp"

#include <sstream>

namespace leadsolve {

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw StructuralError("dot: length mismatch");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    acc += a[i].mpq() * b[i].mpq();
  }
  return Rational(acc);
}

Rational sum(std::span<const Rational> v) {
  mpq_class acc = 0;
  for (const auto& x : v) acc += x.mpq();
  return Rational(acc);
}

RatVector unit_vector(std::size_t size, std::size_t index) {
  RatVector v(size);
  v.at(index) = 1;
  return v;
}

std::string to_string(std::span<const Rational> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw StructuralError("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  RatMatrix m;
  m.rows_ = rows.size();
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  m.data_.reserve(m.rows_ * m.cols_);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw StructuralError("ragged matrix: row " + std::to_string(r + 1) + " has " +
                            std::to_string(rows[r].size()) + " entries, expected " +
                            std::to_string(m.cols_));
    }
    m.data_.insert(m.data_.end(), rows[r].begin(), rows[r].end());
  }
  return m;
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix n = *this;
  for (auto& x : n.data_) x = -x;
  return n;
}

RatVector RatMatrix::left_multiply(std::span<const Rational> x) const {
  if (x.size() != rows_) throw StructuralError("left_multiply: length mismatch");
  std::vector<mpq_class> acc(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (x[r].is_zero()) continue;
    for (std::size_t c = 0; c < cols_; ++c) acc[c] += x[r].mpq() * (*this)(r, c).mpq();
  }
  RatVector out;
  out.reserve(cols_);
  for (auto& a : acc) out.emplace_back(std::move(a));
  return out;
}

RatVector RatMatrix::right_multiply(std::span<const Rational> y) const {
  if (y.size() != cols_) throw StructuralError("right_multiply: length mismatch");
  RatVector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(dot(row(r), y));
  return out;
}

Rational RatMatrix::bilinear(std::span<const Rational> x, std::span<const Rational> y) const {
  return dot(left_multiply(x), y);
}

RatMatrix RatMatrix::without_row(std::size_t r) const {
  std::vector<std::size_t> rs, cs;
  for (std::size_t i = 0; i < rows_; ++i) if (i != r) rs.push_back(i);
  for (std::size_t j = 0; j < cols_; ++j) cs.push_back(j);
  return select(rs, cs);
}

RatMatrix RatMatrix::without_column(std::size_t c) const {
  std::vector<std::size_t> rs, cs;
  for (std::size_t i = 0; i < rows_; ++i) rs.push_back(i);
  for (std::size_t j = 0; j < cols_; ++j) if (j != c) cs.push_back(j);
  return select(rs, cs);
}

RatMatrix RatMatrix::with_row(std::span<const Rational> values) const {
  if (values.size() != cols_) throw StructuralError("with_row: length mismatch");
  RatMatrix m = *this;
  m.data_.insert(m.data_.end(), values.begin(), values.end());
  ++m.rows_;
  return m;
}

RatMatrix RatMatrix::with_column(std::span<const Rational> values) const {
  if (values.size() != rows_) throw StructuralError("with_column: length mismatch");
  RatMatrix m(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    m(r, cols_) = values[r];
  }
  return m;
}

RatMatrix RatMatrix::select(const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) const {
  RatMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
  return m;
}

namespace {

// Gaussian elimination to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> reduce(std::vector<std::vector<mpq_class>>& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    mpq_class inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t k = c; k < a[i].size(); ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RatVector> solve_square(RatMatrix m, RatVector rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) throw StructuralError("solve_square: shape mismatch");
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).mpq();
    a[i][n] = rhs[i].mpq();
  }
  if (reduce(a, n).size() < n) return std::nullopt;
  RatVector x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) x.emplace_back(a[i][n]);
  return x;
}

std::size_t rank(RatMatrix m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).mpq();
  return reduce(a, m.cols()).size();
}

}  // namespace leadsolve
