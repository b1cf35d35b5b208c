#pragma once

// Toeplitz matrices, their polynomial symbols, and the 3n x 3n linearization S of
// (p, q, r) -> T~ p + x^n q + (x^2n - 1) r on polynomials of degree < n.

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "syzolve/errors.hpp"
#include "syzolve/field.hpp"
#include "syzolve/laurent.hpp"
#include "syzolve/linalg.hpp"
#include "syzolve/poly.hpp"

namespace syzolve {

/// n x n Toeplitz matrix, entry (i, j) = t_{i-j}. Stores t_{-n+1} .. t_{n-1}.
template <Field F>
class ToeplitzMatrix {
 public:
  using value_type = F;

  ToeplitzMatrix() = default;
  ToeplitzMatrix(std::size_t n, std::vector<F> diagonals) : n_(n), d_(std::move(diagonals)) {
    if (n_ == 0) throw DimensionError("Toeplitz matrix must have n >= 1");
    if (d_.size() != 2 * n_ - 1)
      throw DimensionError("Toeplitz matrix of size " + std::to_string(n_) + " needs " + std::to_string(2 * n_ - 1) +
                           " diagonals, got " + std::to_string(d_.size()));
  }

  static ToeplitzMatrix identity(std::size_t n) {
    std::vector<F> d(2 * n - 1, field_traits<F>::zero());
    d[n - 1] = field_traits<F>::one();
    return ToeplitzMatrix(n, std::move(d));
  }

  std::size_t size() const { return n_; }
  std::span<const F> diagonals() const { return d_; }

  /// t_k, zero when |k| >= n.
  F t(std::ptrdiff_t k) const {
    const auto n = static_cast<std::ptrdiff_t>(n_);
    if (k <= -n || k >= n) return field_traits<F>::zero();
    return d_[static_cast<std::size_t>(k + n - 1)];
  }

  F operator()(std::size_t i, std::size_t j) const {
    return t(static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(j));
  }

  Matrix<F> dense() const {
    Matrix<F> m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

  /// max_i sum_j |t_{i-j}|
  double norm_inf() const {
    std::vector<double> prefix(d_.size() + 1, 0.0);
    for (std::size_t k = 0; k < d_.size(); ++k) prefix[k + 1] = prefix[k] + magnitude(d_[k]);
    double best = 0.0;
    // Row i touches diagonals t_{i-n+1} .. t_i, i.e. storage slots i .. i+n-1.
    for (std::size_t i = 0; i < n_; ++i) best = std::max(best, prefix[i + n_] - prefix[i]);
    return best;
  }

  friend bool operator==(const ToeplitzMatrix&, const ToeplitzMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<F> d_;
};

template <Field F>
struct ToeplitzSymbols {
  std::size_t n = 0;
  LaurentPoly<F> laurent;  // T(x) = sum t_i x^i
  UniPoly<F> wrapped;      // T~(x), degree <= 2n-1, equals T on the 2n-th roots of unity
  UniPoly<F> shifted;      // x^(n-1) T(x)
};

template <Field F>
ToeplitzSymbols<F> symbols(const ToeplitzMatrix<F>& tm) {
  const std::size_t n = tm.size();
  const auto sn = static_cast<std::ptrdiff_t>(n);
  ToeplitzSymbols<F> s;
  s.n = n;
  for (std::ptrdiff_t k = -sn + 1; k < sn; ++k) s.laurent.add_term(k, tm.t(k));
  std::vector<F> w(2 * n, field_traits<F>::zero());
  for (std::size_t i = 0; i < 2 * n; ++i) {
    const auto si = static_cast<std::ptrdiff_t>(i);
    w[i] = i < n ? tm.t(si) : tm.t(si - 2 * sn);
  }
  s.wrapped = UniPoly<F>(std::move(w));
  s.shifted = UniPoly<F>(std::vector<F>(tm.diagonals().begin(), tm.diagonals().end()));
  return s;
}

/// T u as the coefficients of x^0..x^(n-1) in T(x) u(x).
template <Field F>
std::vector<F> matvec(const ToeplitzMatrix<F>& tm, std::span<const F> u) {
  const std::size_t n = tm.size();
  if (u.size() != n) throw DimensionError("matvec: vector of length " + std::to_string(u.size()) + " for n = " + std::to_string(n));
  const UniPoly<F> shifted(std::vector<F>(tm.diagonals().begin(), tm.diagonals().end()));
  const UniPoly<F> prod = shifted * UniPoly<F>(std::vector<F>(u.begin(), u.end()));
  std::vector<F> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = prod.coeff(n - 1 + i);
  return g;
}

/// Reference solve on the dense matrix (fraction-free over rationals, partial pivoting over float64).
template <Field F>
std::vector<F> dense_solve(const ToeplitzMatrix<F>& tm, std::span<const F> g) {
  const std::size_t n = tm.size();
  if (g.size() != n) throw DimensionError("dense_solve: right-hand side of length " + std::to_string(g.size()) + " for n = " + std::to_string(n));
  Matrix<F> b(n, 1);
  for (std::size_t i = 0; i < n; ++i) b(i, 0) = g[i];
  return linalg::solve(tm.dense(), b).column(0);
}

/// The 3n x 3n matrix [[T0, 0, -I], [T1, I, 0], [T2, 0, I]].
template <Field F>
Matrix<F> assemble_S(const ToeplitzMatrix<F>& tm) {
  const std::size_t n = tm.size();
  const auto sym = symbols(tm);
  Matrix<F> s(3 * n, 3 * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < sym.wrapped.size(); ++k) s(j + k, j) = sym.wrapped[k];
    s(n + j, n + j) = field_traits<F>::one();
    s(2 * n + j, 2 * n + j) = field_traits<F>::one();
    s(j, 2 * n + j) = -field_traits<F>::one();
  }
  return s;
}

/// T0 + T2 built from the wrapped symbol: (r, j) -> t~_{r-j} + t~_{r-j+2n}.
template <Field F>
Matrix<F> folded_block(const ToeplitzSymbols<F>& sym) {
  const std::size_t n = sym.n;
  Matrix<F> m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) {
      F v = r >= j ? sym.wrapped.coeff(r - j) : field_traits<F>::zero();
      v += sym.wrapped.coeff(r + 2 * n - j);
      m(r, j) = v;
    }
  return m;
}

template <Field F>
struct SPreimage {
  UniPoly<F> p, q, r;
};

/// Solves S (p, q, r) = rhs for each right-hand side (degree < 3n) by block
/// elimination: (T0 + T2) p = G0 + G2, then q = G1 - T1 p, r = G2 - T2 p.
template <Field F>
std::vector<SPreimage<F>> solve_S(const ToeplitzSymbols<F>& sym, const std::vector<UniPoly<F>>& rhs) {
  const std::size_t n = sym.n;
  Matrix<F> b(n, rhs.size());
  for (std::size_t c = 0; c < rhs.size(); ++c) {
    if (rhs[c].degree() >= 3 * n) throw DimensionError("solve_S: right-hand side exceeds degree 3n-1");
    for (std::size_t i = 0; i < n; ++i) b(i, c) = rhs[c].coeff(i) + rhs[c].coeff(2 * n + i);
  }
  const Matrix<F> p = linalg::solve(folded_block(sym), b);
  std::vector<SPreimage<F>> out;
  out.reserve(rhs.size());
  for (std::size_t c = 0; c < rhs.size(); ++c) {
    UniPoly<F> pc(p.column(c));
    const UniPoly<F> image = sym.wrapped * pc;
    UniPoly<F> q = rhs[c].window(n, 2 * n) - image.window(n, 2 * n);
    UniPoly<F> r = rhs[c].window(2 * n, 3 * n) - image.window(2 * n, 3 * n);
    out.push_back({std::move(pc), std::move(q), std::move(r)});
  }
  return out;
}

}  // namespace syzolve
