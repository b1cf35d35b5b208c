#pragma once

// Toeplitz-block-Toeplitz systems through the nine-entry generator vector
//   T = (T~, x^m, x^2m - 1, y^n, x^m y^n, (x^2m - 1) y^n, y^2n - 1, x^m (y^2n - 1), (x^2m - 1)(y^2n - 1)).
// Vectors of length mn are indexed j*m + i for the monomial x^i y^j.

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "syzolve/bipoly.hpp"
#include "syzolve/errors.hpp"
#include "syzolve/field.hpp"
#include "syzolve/linalg.hpp"

namespace syzolve {

/// mn x mn matrix with entry (alpha, beta) = t_{alpha - beta}, alpha, beta in [0,m) x [0,n).
template <Field F>
class TbtMatrix {
 public:
  using value_type = F;

  TbtMatrix() = default;
  /// grid: row-major (2m-1) x (2n-1), row i+m-1 holds t_{i, -n+1..n-1}.
  TbtMatrix(std::size_t m, std::size_t n, std::vector<F> grid) : m_(m), n_(n), g_(std::move(grid)) {
    if (m_ == 0 || n_ == 0) throw DimensionError("TBT matrix needs m, n >= 1");
    if (g_.size() != (2 * m_ - 1) * (2 * n_ - 1))
      throw DimensionError("TBT matrix " + std::to_string(m_) + "x" + std::to_string(n_) + " needs a " +
                           std::to_string(2 * m_ - 1) + "x" + std::to_string(2 * n_ - 1) + " diagonal grid");
  }

  static TbtMatrix identity(std::size_t m, std::size_t n) {
    std::vector<F> g((2 * m - 1) * (2 * n - 1), field_traits<F>::zero());
    g[(m - 1) * (2 * n - 1) + (n - 1)] = field_traits<F>::one();
    return TbtMatrix(m, n, std::move(g));
  }

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t size() const { return m_ * n_; }
  std::span<const F> grid() const { return g_; }

  F t(std::ptrdiff_t i, std::ptrdiff_t j) const {
    const auto m = static_cast<std::ptrdiff_t>(m_), n = static_cast<std::ptrdiff_t>(n_);
    if (i <= -m || i >= m || j <= -n || j >= n) return field_traits<F>::zero();
    return g_[static_cast<std::size_t>((i + m - 1) * (2 * n - 1) + (j + n - 1))];
  }

  Matrix<F> dense() const {
    const std::size_t k = size();
    Matrix<F> a(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) {
        const auto di = static_cast<std::ptrdiff_t>(r % m_) - static_cast<std::ptrdiff_t>(c % m_);
        const auto dj = static_cast<std::ptrdiff_t>(r / m_) - static_cast<std::ptrdiff_t>(c / m_);
        a(r, c) = t(di, dj);
      }
    return a;
  }

  double norm_inf() const {
    double best = 0.0;
    for (std::size_t r = 0; r < size(); ++r) {
      double s = 0.0;
      for (std::size_t c = 0; c < size(); ++c) {
        const auto di = static_cast<std::ptrdiff_t>(r % m_) - static_cast<std::ptrdiff_t>(c % m_);
        const auto dj = static_cast<std::ptrdiff_t>(r / m_) - static_cast<std::ptrdiff_t>(c / m_);
        s += magnitude(t(di, dj));
      }
      best = std::max(best, s);
    }
    return best;
  }

  friend bool operator==(const TbtMatrix&, const TbtMatrix&) = default;

 private:
  std::size_t m_ = 0, n_ = 0;
  std::vector<F> g_;
};

template <Field F>
struct TbtSymbols {
  std::size_t m = 0, n = 0;
  BiPoly<F> shifted;  // x^(m-1) y^(n-1) T(x, y)
  BiPoly<F> wrapped;  // T~(x, y), deg_x <= 2m-1, deg_y <= 2n-1

  /// T(x, y) = x^(1-m) y^(1-n) shifted(x, y), x and y non-zero.
  std::complex<double> eval_laurent(std::complex<double> x, std::complex<double> y) const {
    return shifted.eval(x, y) * std::pow(x, 1.0 - static_cast<double>(m)) * std::pow(y, 1.0 - static_cast<double>(n));
  }
};

template <Field F>
TbtSymbols<F> tbt_symbols(const TbtMatrix<F>& tm) {
  const std::size_t m = tm.m(), n = tm.n();
  TbtSymbols<F> s;
  s.m = m;
  s.n = n;
  s.shifted = BiPoly<F>(2 * m - 1, 2 * n - 1, std::vector<F>(tm.grid().begin(), tm.grid().end()));
  BiPoly<F> w = BiPoly<F>::zeros(2 * m, 2 * n);
  const auto sm = static_cast<std::ptrdiff_t>(m), sn = static_cast<std::ptrdiff_t>(n);
  for (std::ptrdiff_t i = 0; i < 2 * sm; ++i)
    for (std::ptrdiff_t j = 0; j < 2 * sn; ++j)
      w.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = tm.t(i < sm ? i : i - 2 * sm, j < sn ? j : j - 2 * sn);
  s.wrapped = w.normalized();
  return s;
}

/// Coefficients of x^0..x^(m-1) y^0..y^(n-1) in T(x, y) u(x, y).
template <Field F>
std::vector<F> tbt_matvec(const TbtMatrix<F>& tm, std::span<const F> u) {
  const std::size_t m = tm.m(), n = tm.n();
  if (u.size() != m * n) throw DimensionError("tbt_matvec: vector of length " + std::to_string(u.size()) + ", expected " + std::to_string(m * n));
  const BiPoly<F> shifted(2 * m - 1, 2 * n - 1, std::vector<F>(tm.grid().begin(), tm.grid().end()));
  const BiPoly<F> prod = shifted * BiPoly<F>::from_box_vector(u, m, n);
  return prod.block(m - 1, n - 1, m, n).to_box_vector(m, n);
}

template <Field F>
std::vector<F> dense_solve_tbt(const TbtMatrix<F>& tm, std::span<const F> g) {
  if (g.size() != tm.size()) throw DimensionError("dense_solve_tbt: right-hand side has wrong length");
  Matrix<F> b(tm.size(), 1);
  for (std::size_t i = 0; i < g.size(); ++i) b(i, 0) = g[i];
  return linalg::solve(tm.dense(), b).column(0);
}

template <Field F>
using Vec9 = std::array<BiPoly<F>, 9>;

/// The generator vector T for the given symbol.
template <Field F>
Vec9<F> generator_vector(const TbtSymbols<F>& sym) {
  const std::size_t m = sym.m, n = sym.n;
  const F one = field_traits<F>::one();
  const auto xm = BiPoly<F>::monomial(one, m, 0);
  const auto yn = BiPoly<F>::monomial(one, 0, n);
  const auto wx = BiPoly<F>::monomial(one, 2 * m, 0) - BiPoly<F>::constant(one);
  const auto wy = BiPoly<F>::monomial(one, 0, 2 * n) - BiPoly<F>::constant(one);
  return {sym.wrapped, xm, wx, yn, xm * yn, wx * yn, wy, xm * wy, wx * wy};
}

/// T . h
template <Field F>
BiPoly<F> apply_generators(const Vec9<F>& gens, const Vec9<F>& h) {
  BiPoly<F> acc;
  for (std::size_t k = 0; k < 9; ++k) acc += gens[k] * h[k];
  return acc;
}

template <Field F>
BiPoly<F> apply_generators(const TbtSymbols<F>& sym, const Vec9<F>& h) {
  return apply_generators(generator_vector(sym), h);
}

/// The 9mn x 9mn matrix of h -> T . h from the (m-1, n-1) box to the (3m-1, 3n-1) box.
/// Column k*mn + j*m + i is x^i y^j sigma_(k+1); row J*3m + I is x^I y^J.
template <Field F>
Matrix<F> assemble_S9(const TbtMatrix<F>& tm) {
  const auto sym = tbt_symbols(tm);
  const std::size_t m = sym.m, n = sym.n, mn = m * n;
  const auto gens = generator_vector(sym);
  Matrix<F> s(9 * mn, 9 * mn);
  for (std::size_t k = 0; k < 9; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t col = k * mn + j * m + i;
        const auto& g = gens[k];
        for (std::size_t a = 0; a < g.rows(); ++a)
          for (std::size_t b = 0; b < g.cols(); ++b) s((j + b) * 3 * m + (i + a), col) = g.coeff(a, b);
      }
  return s;
}

/// Sum of the four corner blocks of h1 -> T~ h1, as an mn x mn matrix.
template <Field F>
Matrix<F> tbt_folded_block(const TbtSymbols<F>& sym) {
  const std::size_t m = sym.m, n = sym.n;
  Matrix<F> a(m * n, m * n);
  const auto& w = sym.wrapped;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t p = 0; p < w.rows(); ++p) {
        const std::size_t big_i = i + p;
        if (big_i >= m && big_i < 2 * m) continue;
        const std::size_t fi = big_i < m ? big_i : big_i - 2 * m;
        for (std::size_t q = 0; q < w.cols(); ++q) {
          const std::size_t big_j = j + q;
          if (big_j >= n && big_j < 2 * n) continue;
          const std::size_t fj = big_j < n ? big_j : big_j - 2 * n;
          a(fj * m + fi, j * m + i) += w.coeff(p, q);
        }
      }
  return a;
}

/// Solves S9 h = G for right-hand sides in the (3m-1, 3n-1) box. With C = T~ h1 and
/// X_ab the block at x^(am) y^(bn): h1 from the folded corner system, then
/// h9 = G22 - C22, h8 = G12 - C12, h6 = G21 - C21, h5 = G11 - C11,
/// h7 = G02 - C02 + h9, h3 = G20 - C20 + h9, h4 = G01 - C01 + h6, h2 = G10 - C10 + h8.
template <Field F>
std::vector<Vec9<F>> solve_S9(const TbtSymbols<F>& sym, const std::vector<BiPoly<F>>& rhs) {
  const std::size_t m = sym.m, n = sym.n, mn = m * n;
  Matrix<F> b(mn, rhs.size());
  for (std::size_t c = 0; c < rhs.size(); ++c) {
    if (!rhs[c].fits_box(3 * m, 3 * n)) throw DimensionError("solve_S9: right-hand side exceeds the (3m-1, 3n-1) box");
    BiPoly<F> corner = rhs[c].block(0, 0, m, n) + rhs[c].block(2 * m, 0, m, n) + rhs[c].block(0, 2 * n, m, n) +
                       rhs[c].block(2 * m, 2 * n, m, n);
    const auto v = corner.to_box_vector(m, n);
    for (std::size_t i = 0; i < mn; ++i) b(i, c) = v[i];
  }
  const Matrix<F> h1s = linalg::solve(tbt_folded_block(sym), b);
  std::vector<Vec9<F>> out;
  out.reserve(rhs.size());
  for (std::size_t c = 0; c < rhs.size(); ++c) {
    const auto col = h1s.column(c);
    Vec9<F> h;
    h[0] = BiPoly<F>::from_box_vector(col, m, n);
    const BiPoly<F> img = sym.wrapped * h[0];
    auto d = [&](std::size_t a, std::size_t bb) {
      return rhs[c].block(a * m, bb * n, m, n) - img.block(a * m, bb * n, m, n);
    };
    h[8] = d(2, 2);
    h[7] = d(1, 2);
    h[5] = d(2, 1);
    h[4] = d(1, 1);
    h[6] = d(0, 2) + h[8];
    h[2] = d(2, 0) + h[8];
    h[3] = d(0, 1) + h[5];
    h[1] = d(1, 0) + h[7];
    out.push_back(std::move(h));
  }
  return out;
}

template <Field F>
struct SyzygySet9 {
  std::size_t m = 0, n = 0;
  std::array<Vec9<F>, 8> rho;

  static constexpr std::size_t size() { return 8; }
};

/// rho1 = x^m s1 - u1, rho2 = y^n s1 - u2, rho3 = x^m s2 - s3 - u3, rho4 = y^n s4 - s7 - u3,
/// rho5 = y^n s2 - s5, rho6 = x^m s4 - s5, rho7 = x^m s5 - s6 - s4, rho8 = y^n s5 - s8 - s2,
/// where T . u1 = T~ x^m, T . u2 = T~ y^n, T . u3 = 1 with u_i in the low box.
template <Field F>
SyzygySet9<F> generators_rho(const TbtMatrix<F>& tm) {
  const auto sym = tbt_symbols(tm);
  const std::size_t m = sym.m, n = sym.n;
  const F one = field_traits<F>::one();
  const auto xm = BiPoly<F>::monomial(one, m, 0);
  const auto yn = BiPoly<F>::monomial(one, 0, n);
  const auto c1 = BiPoly<F>::constant(one);
  const auto us = solve_S9(sym, {sym.wrapped.shifted(m, 0), sym.wrapped.shifted(0, n), c1});

  auto neg = [](Vec9<F> v) {
    for (auto& e : v) e = -e;
    return v;
  };
  SyzygySet9<F> s;
  s.m = m;
  s.n = n;
  s.rho[0] = neg(us[0]);
  s.rho[0][0] += xm;
  s.rho[1] = neg(us[1]);
  s.rho[1][0] += yn;
  s.rho[2] = neg(us[2]);
  s.rho[2][1] += xm;
  s.rho[2][2] -= c1;
  s.rho[3] = neg(us[2]);
  s.rho[3][3] += yn;
  s.rho[3][6] -= c1;
  s.rho[4][1] = yn;
  s.rho[4][4] = -c1;
  s.rho[5][3] = xm;
  s.rho[5][4] = -c1;
  s.rho[6][4] = xm;
  s.rho[6][5] = -c1;
  s.rho[6][3] = -c1;
  s.rho[7][4] = yn;
  s.rho[7][7] = -c1;
  s.rho[7][1] = -c1;

  if constexpr (is_exact_v<F>) {
    const auto gens = generator_vector(sym);
    for (std::size_t i = 0; i < 8; ++i)
      if (!apply_generators(gens, s.rho[i]).is_zero())
        throw std::logic_error("generators_rho: rho" + std::to_string(i + 1) + " is not a syzygy");
  }
  return s;
}

template <Field F>
struct TbtSolution {
  std::vector<F> u;
  Vec9<F> h;  // the element of L(T; g) with every entry in the (m-1, n-1) box
};

template <Field F>
TbtSolution<F> solve_tbt(const TbtMatrix<F>& tm, std::span<const F> g) {
  const std::size_t m = tm.m(), n = tm.n();
  if (g.size() != m * n) throw DimensionError("solve_tbt: right-hand side has length " + std::to_string(g.size()) + ", expected " + std::to_string(m * n));
  const auto sym = tbt_symbols(tm);
  auto hs = solve_S9(sym, {BiPoly<F>::from_box_vector(g, m, n)});
  TbtSolution<F> sol;
  sol.u = hs[0][0].to_box_vector(m, n);
  sol.h = std::move(hs[0]);
  return sol;
}

template <Field F>
double tbt_residual_norm(const TbtMatrix<F>& tm, std::span<const F> u, std::span<const F> g) {
  const auto tu = tbt_matvec(tm, u);
  double r = 0.0;
  for (std::size_t i = 0; i < tu.size(); ++i) r = std::max(r, magnitude(F(tu[i] - g[i])));
  return r;
}

template <Field F>
double tbt_scaled_residual(const TbtMatrix<F>& tm, std::span<const F> u, std::span<const F> g) {
  double nu = 0.0, ng = 0.0;
  for (const auto& v : u) nu = std::max(nu, magnitude(v));
  for (const auto& v : g) ng = std::max(ng, magnitude(v));
  const double denom = tm.norm_inf() * nu + ng;
  const double r = tbt_residual_norm(tm, u, g);
  return denom == 0.0 ? r : r / denom;
}

/// B[r][c]: coefficient of sigma1, sigma2, sigma4, sigma5 (r = 0..3) in rho1, rho2, rho3 (c = 0..2).
template <Field F>
using BMatrix = std::array<std::array<BiPoly<F>, 3>, 4>;

template <Field F>
BMatrix<F> extract_B_xy(const SyzygySet9<F>& s) {
  static constexpr std::array<std::size_t, 4> rows{0, 1, 3, 4};
  BMatrix<F> b;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 3; ++c) b[r][c] = s.rho[c][rows[r]];
  return b;
}

/// Coordinates (h3, h6, h7, h8, h9) completing a column of B to a syzygy, read from
/// -(T~, x^m, y^n, x^m y^n) . B modulo (x^2m - 1, y^2n - 1).
template <Field F>
struct IdealCoordinates {
  BiPoly<F> h3, h6, h7, h8, h9;
};

template <Field F>
std::array<IdealCoordinates<F>, 3> recover_ideal_coordinates(const TbtSymbols<F>& sym, const BMatrix<F>& b) {
  const std::size_t m = sym.m, n = sym.n;
  const F one = field_traits<F>::one();
  const auto xm = BiPoly<F>::monomial(one, m, 0);
  const auto yn = BiPoly<F>::monomial(one, 0, n);
  std::array<IdealCoordinates<F>, 3> out;
  for (std::size_t c = 0; c < 3; ++c) {
    const BiPoly<F> q = -(sym.wrapped * b[0][c] + xm * b[1][c] + yn * b[2][c] + (xm * yn) * b[3][c]);
    if (!q.fits_box(3 * m, 3 * n)) throw DimensionError("recover_ideal_coordinates: column does not fit the (3m-1, 3n-1) box");
    auto blk = [&](std::size_t a, std::size_t bb) { return q.block(a * m, bb * n, m, n); };
    IdealCoordinates<F> h;
    h.h9 = blk(2, 2);
    h.h8 = blk(1, 2);
    h.h6 = blk(2, 1);
    h.h7 = blk(0, 2) + h.h9;
    h.h3 = blk(2, 0) + h.h9;
    if constexpr (is_exact_v<F>) {
      const bool ok = blk(1, 1).is_zero() && (blk(1, 0) + h.h8).is_zero() && (blk(0, 1) + h.h6).is_zero() &&
                      (blk(0, 0) + h.h3 + h.h7 - h.h9).is_zero();
      if (!ok) throw std::logic_error("recover_ideal_coordinates: column of B is not completable to a syzygy");
    }
    out[c] = std::move(h);
  }
  return out;
}

template <Field To, Field From>
TbtMatrix<To> map_field(const TbtMatrix<From>& tm) {
  std::vector<To> g;
  for (const auto& v : tm.grid()) g.push_back(field_cast<To>(v));
  return TbtMatrix<To>(tm.m(), tm.n(), std::move(g));
}

}  // namespace syzolve
