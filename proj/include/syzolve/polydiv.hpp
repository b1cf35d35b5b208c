#pragma once

// Division of a polynomial 2-vector by a 2x2 polynomial matrix with invertible
// leading coefficient matrix, through coefficient reversal and a Newton iteration
// for the truncated inverse of the reversed divisor.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>

#include "syzolve/errors.hpp"
#include "syzolve/field.hpp"
#include "syzolve/poly.hpp"
#include "syzolve/syzygy.hpp"

namespace syzolve {

template <Field F>
using Mat2 = std::array<std::array<F, 2>, 2>;

template <Field F>
struct PolyVec2 {
  std::array<UniPoly<F>, 2> e;

  Degree degree() const { return std::max(e[0].degree(), e[1].degree()); }
  bool is_zero() const { return e[0].is_zero() && e[1].is_zero(); }
  const UniPoly<F>& operator[](std::size_t i) const { return e[i]; }
  UniPoly<F>& operator[](std::size_t i) { return e[i]; }
  friend bool operator==(const PolyVec2&, const PolyVec2&) = default;
  friend PolyVec2 operator-(const PolyVec2& a, const PolyVec2& b) { return {{a.e[0] - b.e[0], a.e[1] - b.e[1]}}; }
  friend PolyVec2 operator+(const PolyVec2& a, const PolyVec2& b) { return {{a.e[0] + b.e[0], a.e[1] + b.e[1]}}; }
};

/// [[a00, a01], [a10, a11]] with polynomial entries.
template <Field F>
struct PolyMat2 {
  std::array<std::array<UniPoly<F>, 2>, 2> a;

  static PolyMat2 identity() {
    const auto one = UniPoly<F>::constant(field_traits<F>::one());
    return {{{{one, UniPoly<F>{}}, {UniPoly<F>{}, one}}}};
  }
  static PolyMat2 constant(const Mat2<F>& m) {
    PolyMat2 p;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) p.a[i][j] = UniPoly<F>::constant(m[i][j]);
    return p;
  }

  Degree degree() const { return std::max({a[0][0].degree(), a[0][1].degree(), a[1][0].degree(), a[1][1].degree()}); }
  const UniPoly<F>& operator()(std::size_t i, std::size_t j) const { return a[i][j]; }
  UniPoly<F>& operator()(std::size_t i, std::size_t j) { return a[i][j]; }

  /// Matrix of the x^k coefficients.
  Mat2<F> coeff(std::size_t k) const {
    return {{{a[0][0].coeff(k), a[0][1].coeff(k)}, {a[1][0].coeff(k), a[1][1].coeff(k)}}};
  }

  PolyMat2 truncated(std::size_t k) const {
    PolyMat2 p;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) p.a[i][j] = a[i][j].truncated(k);
    return p;
  }

  /// Entrywise reversal within a window of length d+1.
  PolyMat2 reversed(std::size_t d) const {
    PolyMat2 p;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) p.a[i][j] = reverse(a[i][j], d);
    return p;
  }

  double max_norm() const {
    double m = 0.0;
    for (const auto& row : a)
      for (const auto& e : row) m = std::max(m, e.max_norm());
    return m;
  }

  friend bool operator==(const PolyMat2&, const PolyMat2&) = default;
  friend PolyMat2 operator-(const PolyMat2& x, const PolyMat2& y) {
    PolyMat2 p;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) p.a[i][j] = x.a[i][j] - y.a[i][j];
    return p;
  }
  friend PolyMat2 operator*(const PolyMat2& x, const PolyMat2& y) {
    PolyMat2 p;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) p.a[i][j] = x.a[i][0] * y.a[0][j] + x.a[i][1] * y.a[1][j];
    return p;
  }
  friend PolyVec2<F> operator*(const PolyMat2& x, const PolyVec2<F>& v) {
    return {{x.a[0][0] * v.e[0] + x.a[0][1] * v.e[1], x.a[1][0] * v.e[0] + x.a[1][1] * v.e[1]}};
  }
  friend PolyMat2 operator*(const F& s, PolyMat2 x) {
    for (auto& row : x.a)
      for (auto& e : row) e *= s;
    return x;
  }
};

/// Product truncated mod x^k, with the operands truncated first.
template <Field F>
PolyMat2<F> mul_truncated(const PolyMat2<F>& x, const PolyMat2<F>& y, std::size_t k) {
  return (x.truncated(k) * y.truncated(k)).truncated(k);
}

template <Field F>
PolyVec2<F> mul_truncated(const PolyMat2<F>& x, const PolyVec2<F>& v, std::size_t k) {
  const PolyVec2<F> vt{{v.e[0].truncated(k), v.e[1].truncated(k)}};
  PolyVec2<F> r = x.truncated(k) * vt;
  return {{r.e[0].truncated(k), r.e[1].truncated(k)}};
}

/// Inverse of a constant 2x2 matrix; LeadingCoefficientError when singular
/// (exactly, or below 1e-12 relative determinant over float64).
template <Field F>
Mat2<F> inverse2(const Mat2<F>& m, const char* what) {
  const F det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  bool singular = is_zero(det);
  if constexpr (!is_exact_v<F>) {
    double scale = 0.0;
    for (const auto& row : m)
      for (const auto& v : row) scale = std::max(scale, magnitude(v));
    singular = singular || magnitude(det) <= 1e-12 * scale * scale;
  }
  if (singular) throw LeadingCoefficientError(std::string(what) + " coefficient matrix is singular");
  const F id = field_traits<F>::one() / det;
  return {{{m[1][1] * id, -m[0][1] * id}, {-m[1][0] * id, m[0][0] * id}}};
}

/// W with W B^ = I mod x^k, by W <- 2W - W B^ W doubling the precision from 1.
/// The observer sees (step l, W_l) with W_l valid mod x^(2^l).
template <Field F>
PolyMat2<F> newton_inverse_truncated(const PolyMat2<F>& bhat, std::size_t k,
                                     const std::function<void(std::size_t, const PolyMat2<F>&)>& observer = {}) {
  if (k == 0) throw DimensionError("newton_inverse_truncated: precision must be >= 1");
  PolyMat2<F> w = PolyMat2<F>::constant(inverse2(bhat.coeff(0), "constant term"));
  std::size_t prec = 1, step = 0;
  if (observer) observer(step, w);
  const F two = field_traits<F>::one() + field_traits<F>::one();
  while (prec < k) {
    prec *= 2;
    ++step;
    const PolyMat2<F> bw = mul_truncated(bhat, w, prec);
    w = mul_truncated(w, two * PolyMat2<F>::identity() - bw, prec);
    if (observer) observer(step, w);
  }
  return w.truncated(k);
}

template <Field F>
struct MatrixDivRem {
  PolyVec2<F> quotient, remainder;
};

namespace detail {

template <Field F>
void check_division(const PolyVec2<F>& e, const PolyMat2<F>& b, const PolyVec2<F>& q, PolyVec2<F>& r, std::size_t n) {
  if constexpr (is_exact_v<F>) {
    if (!(r.degree() < n)) throw std::logic_error("matrix division: remainder degree not below divisor degree");
  } else {
    const double scale = std::max(e.e[0].max_norm(), e.e[1].max_norm()) +
                         b.max_norm() * std::max(q.e[0].max_norm(), q.e[1].max_norm());
    const double high = std::max(r.e[0].window(n, r.e[0].size() + 1).max_norm(), r.e[1].window(n, r.e[1].size() + 1).max_norm());
    if (high > 1e-9 * std::max(scale, 1.0))
      throw NumericalBreakdownError("matrix division: residual " + std::to_string(high) + " above tolerance");
    r = {{r.e[0].truncated(n), r.e[1].truncated(n)}};
  }
}

}  // namespace detail

/// E = B Q + R, deg R < n = deg B, deg Q <= m - n. Q^ = W E^ mod z^(m-n+1) with W
/// the truncated inverse of the reversed divisor.
template <Field F>
MatrixDivRem<F> matrix_divrem(const PolyVec2<F>& e, const PolyMat2<F>& b) {
  if (b.degree().is_neg_inf()) throw LeadingCoefficientError("matrix division by the zero matrix");
  const std::size_t n = b.degree().value();
  inverse2(b.coeff(n), "leading");
  if (e.is_zero() || e.degree() < n) return {PolyVec2<F>{}, e};
  const std::size_t m = e.degree().value();
  const std::size_t k = m - n + 1;
  const PolyVec2<F> ehat{{reverse(e.e[0], m).truncated(k), reverse(e.e[1], m).truncated(k)}};
  const PolyMat2<F> w = newton_inverse_truncated(b.reversed(n).truncated(k), k);
  const PolyVec2<F> qhat = mul_truncated(w, ehat, k);
  const PolyVec2<F> q{{reverse(qhat.e[0], m - n), reverse(qhat.e[1], m - n)}};
  PolyVec2<F> r = e - b * q;
  detail::check_division(e, b, q, r, n);
  return {q, r};
}

/// Long division by leading coefficient matrices; independent check of matrix_divrem.
template <Field F>
MatrixDivRem<F> naive_matrix_divrem(const PolyVec2<F>& e, const PolyMat2<F>& b) {
  if (b.degree().is_neg_inf()) throw LeadingCoefficientError("matrix division by the zero matrix");
  const std::size_t n = b.degree().value();
  const Mat2<F> linv = inverse2(b.coeff(n), "leading");
  PolyVec2<F> r = e, q;
  while (!r.is_zero() && r.degree() >= n) {
    const std::size_t d = r.degree().value();
    const F top0 = r.e[0].coeff(d), top1 = r.e[1].coeff(d);
    const F c0 = linv[0][0] * top0 + linv[0][1] * top1;
    const F c1 = linv[1][0] * top0 + linv[1][1] * top1;
    const PolyVec2<F> term{{UniPoly<F>::monomial(c0, d - n), UniPoly<F>::monomial(c1, d - n)}};
    q = q + term;
    r = r - b * term;
    if constexpr (!is_exact_v<F>) r = {{r.e[0].truncated(d), r.e[1].truncated(d)}};
  }
  return {q, r};
}

/// The (sigma1, sigma2) block [[u1, u2], [v1, v2]] of a basis.
template <Field F>
PolyMat2<F> basis_matrix(const SyzygyBasis<F>& b) {
  return {{{{b.rho1.u, b.rho2.u}, {b.rho1.v, b.rho2.v}}}};
}

/// s - (rho1, rho2) Q where Q divides the (sigma1, sigma2) part of s by the basis
/// matrix. The sigma3 coordinate is carried along only when track_w is set.
template <Field F>
SyzygyVec3<F> reduce_vec3(const SyzygyVec3<F>& s, const SyzygyBasis<F>& basis, bool track_w = true) {
  const auto [q, r] = matrix_divrem(PolyVec2<F>{{s.u, s.v}}, basis_matrix(basis));
  SyzygyVec3<F> out{r.e[0], r.e[1], {}};
  if (track_w) out.w = s.w - q.e[0] * basis.rho1.w - q.e[1] * basis.rho2.w;
  return out;
}

}  // namespace syzolve
