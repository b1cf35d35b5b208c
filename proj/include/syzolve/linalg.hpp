#pragma once

// Dense matrices and the two elimination kernels: fraction-free Bareiss over the
// rationals, partial-pivoting LU (Eigen) over float64.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "syzolve/errors.hpp"
#include "syzolve/field.hpp"

namespace syzolve {

template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, field_traits<F>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field_traits<F>::one();
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<F>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::span<const F> data() const { return a_; }

  std::vector<F> column(std::size_t j) const {
    std::vector<F> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<F> operator*(std::span<const F> x) const {
    if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
    std::vector<F> y(rows_, field_traits<F>::zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, magnitude(v));
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> a_;
};

namespace linalg {

namespace detail {

// Scales each row of [A | B] to integers.
inline std::vector<std::vector<mpz_class>> integer_rows(const Matrix<Rational>& a, const Matrix<Rational>* b) {
  const std::size_t extra = b ? b->cols() : 0;
  std::vector<std::vector<mpz_class>> m(a.rows(), std::vector<mpz_class>(a.cols() + extra));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    auto absorb = [&l](const Rational& v) { mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get().get_den_mpz_t()); };
    for (std::size_t j = 0; j < a.cols(); ++j) absorb(a(i, j));
    for (std::size_t j = 0; j < extra; ++j) absorb((*b)(i, j));
    auto put = [&l](mpz_class& dst, const Rational& v) {
      mpz_divexact(dst.get_mpz_t(), l.get_mpz_t(), v.get().get_den_mpz_t());
      dst *= v.get().get_num();
    };
    for (std::size_t j = 0; j < a.cols(); ++j) put(m[i][j], a(i, j));
    for (std::size_t j = 0; j < extra; ++j) put(m[i][a.cols() + j], (*b)(i, j));
  }
  return m;
}

// One Bareiss update of row i against pivot row k, columns [from, width).
inline void bareiss_row(std::vector<mpz_class>& ri, const std::vector<mpz_class>& rk, std::size_t col, std::size_t from,
                        const mpz_class& prev) {
  const mpz_class pivot = rk[col];
  const mpz_class factor = ri[col];
  for (std::size_t j = from; j < ri.size(); ++j) {
    mpz_class& v = ri[j];
    v *= pivot;
    mpz_submul(v.get_mpz_t(), factor.get_mpz_t(), rk[j].get_mpz_t());
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
  }
  ri[col] = 0;
}

}  // namespace detail

/// Exact solve of A X = B by fraction-free elimination.
inline Matrix<Rational> solve(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw DimensionError("solve: expected square A and matching B");
  const std::size_t k = b.cols();
  if (n == 0) return Matrix<Rational>(0, k);
  auto m = detail::integer_rows(a, &b);
  mpz_class prev = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) throw SingularMatrixError("matrix is singular (zero pivot in column " + std::to_string(c) + ")");
    std::swap(m[p], m[c]);
    for (std::size_t i = c + 1; i < n; ++i) detail::bareiss_row(m[i], m[c], c, c + 1, prev);
    prev = m[c][c];
  }
  // Cramer scaling: det * x is integral, so every division below is exact.
  const mpz_class det = m[n - 1][n - 1];
  Matrix<Rational> x(n, k);
  std::vector<mpz_class> y(n);
  mpz_class acc;
  for (std::size_t col = 0; col < k; ++col) {
    for (std::size_t i = n; i-- > 0;) {
      acc = det * m[i][n + col];
      for (std::size_t j = i + 1; j < n; ++j) mpz_submul(acc.get_mpz_t(), m[i][j].get_mpz_t(), y[j].get_mpz_t());
      mpz_divexact(y[i].get_mpz_t(), acc.get_mpz_t(), m[i][i].get_mpz_t());
    }
    for (std::size_t i = 0; i < n; ++i) x(i, col) = Rational(y[i], det);
  }
  return x;
}

/// Exact rank by fraction-free row echelon form.
inline std::size_t rank(const Matrix<Rational>& a) {
  auto m = detail::integer_rows(a, nullptr);
  const std::size_t rows = a.rows(), cols = a.cols();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) detail::bareiss_row(m[i], m[r], c, c + 1, prev);
    prev = m[r][c];
    ++r;
  }
  return r;
}

inline constexpr double kFloatPivotTolerance = 1e-12;

/// float64 solve by LU with partial pivoting. Singular when the smallest pivot is
/// below 1e-12 * max|a_ij|.
inline Matrix<double> solve(const Matrix<double>& a, const Matrix<double>& b) {
  using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const auto n = static_cast<Eigen::Index>(a.rows());
  if (a.cols() != a.rows() || b.rows() != a.rows()) throw DimensionError("solve: expected square A and matching B");
  if (n == 0) return Matrix<double>(0, b.cols());
  Eigen::Map<const RowMat> am(a.data().data(), n, n);
  const double scale = a.max_abs();
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(am);
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(min_pivot > kFloatPivotTolerance * scale))
    throw SingularMatrixError("matrix is numerically singular (pivot " + std::to_string(min_pivot) + ")");
  Eigen::Map<const RowMat> bm(b.data().data(), n, static_cast<Eigen::Index>(b.cols()));
  Eigen::MatrixXd xs = lu.solve(Eigen::MatrixXd(bm));
  Matrix<double> x(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < xs.cols(); ++j) x(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = xs(i, j);
  return x;
}

template <Field F>
bool is_nonsingular(const Matrix<F>& a) {
  if constexpr (is_exact_v<F>) {
    return rank(a) == a.rows() && a.rows() == a.cols();
  } else {
    try {
      solve(a, Matrix<F>(a.rows(), 0));
      return true;
    } catch (const SingularMatrixError&) {
      return false;
    }
  }
}

}  // namespace linalg
}  // namespace syzolve
