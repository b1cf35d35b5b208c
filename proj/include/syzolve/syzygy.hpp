#pragma once

// Syzygies of (T~(x), x^n, x^2n - 1) and the two constructions of the degree-n basis.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "syzolve/errors.hpp"
#include "syzolve/field.hpp"
#include "syzolve/poly.hpp"
#include "syzolve/toeplitz.hpp"

namespace syzolve {

/// (u, v, w) on the canonical basis (sigma1, sigma2, sigma3) of K[x]^3.
template <Field F>
struct SyzygyVec3 {
  UniPoly<F> u, v, w;

  Degree degree() const { return std::max({u.degree(), v.degree(), w.degree()}); }
  bool is_zero() const { return u.is_zero() && v.is_zero() && w.is_zero(); }
  friend bool operator==(const SyzygyVec3&, const SyzygyVec3&) = default;
  friend SyzygyVec3 operator+(const SyzygyVec3& a, const SyzygyVec3& b) { return {a.u + b.u, a.v + b.v, a.w + b.w}; }
  friend SyzygyVec3 operator-(const SyzygyVec3& a, const SyzygyVec3& b) { return {a.u - b.u, a.v - b.v, a.w - b.w}; }
};

template <Field F>
struct SyzygyBasis {
  std::size_t n = 0;
  SyzygyVec3<F> rho1, rho2;
};

template <Field F>
struct EeaTrace {
  std::vector<UniPoly<F>> r, s, t;
  std::vector<UniPoly<F>> q;  // q[i] produced r[i+1]; q[0] is unused

  std::vector<Degree> degrees() const {
    std::vector<Degree> d;
    for (const auto& ri : r) d.push_back(ri.degree());
    return d;
  }
};

struct EeaOptions {
  double tolerance = 1e-10;  // float only: relative threshold for dropping leading remainder coefficients
  bool monic = true;         // scale each new remainder (and its cofactors) to leading coefficient 1
};

/// s_i p + t_i p' = r_i with r_0 = p, r_1 = p', iterated until deg r_i <= stop_deg (i >= 1).
/// With opts.monic every r_i for i >= 2 is made monic, which keeps rational coefficients short;
/// each row then differs from the classical one by a non-zero scalar.
template <Field F>
EeaTrace<F> extended_euclid(const UniPoly<F>& p, const UniPoly<F>& p2, long long stop_deg, const EeaOptions& opts = {}) {
  if (p.is_zero() || p2.is_zero()) throw DimensionError("extended_euclid: operands must be non-zero");
  auto stop = [stop_deg](const UniPoly<F>& r) {
    return r.is_zero() || static_cast<long long>(r.degree().value()) <= stop_deg;
  };
  EeaTrace<F> tr;
  const auto one = UniPoly<F>::constant(field_traits<F>::one());
  tr.r = {p, p2};
  tr.s = {one, UniPoly<F>{}};
  tr.t = {UniPoly<F>{}, one};
  tr.q = {UniPoly<F>{}};
  while (!stop(tr.r.back())) {
    const std::size_t i = tr.r.size() - 1;
    auto [qi, ri] = divrem(tr.r[i - 1], tr.r[i]);
    if constexpr (!is_exact_v<F>) {
      ri = ri.trimmed(opts.tolerance);
      for (const auto& c : qi.coeffs())
        if (!std::isfinite(c)) throw NumericalBreakdownError("extended_euclid: non-finite quotient at step " + std::to_string(i));
    }
    if (!(ri.degree() < tr.r[i].degree()))
      throw NumericalBreakdownError("extended_euclid: remainder degree did not decrease at step " + std::to_string(i));
    auto si = tr.s[i - 1] - qi * tr.s[i];
    auto ti = tr.t[i - 1] - qi * tr.t[i];
    if (opts.monic && !ri.is_zero()) {
      const F inv = field_traits<F>::one() / ri.leading();
      ri = inv * ri;
      si = inv * si;
      ti = inv * ti;
      qi = inv * qi;
    }
    tr.s.push_back(std::move(si));
    tr.t.push_back(std::move(ti));
    tr.r.push_back(std::move(ri));
    tr.q.push_back(std::move(qi));
  }
  return tr;
}

/// T~ u + x^n v + (x^2n - 1) w
template <Field F>
UniPoly<F> verify_syzygy(const ToeplitzSymbols<F>& sym, const SyzygyVec3<F>& s) {
  const std::size_t n = sym.n;
  UniPoly<F> w_term = s.w.shifted(2 * n) - s.w;
  return sym.wrapped * s.u + s.v.shifted(n) + w_term;
}

template <Field F>
UniPoly<F> verify_syzygy(const ToeplitzMatrix<F>& tm, const SyzygyVec3<F>& s) {
  return verify_syzygy(symbols(tm), s);
}

/// (mu1, mu2): the largest component degree of each generator.
template <Field F>
std::pair<Degree, Degree> mu_degrees(const SyzygyBasis<F>& b) {
  return {b.rho1.degree(), b.rho2.degree()};
}

/// Positive-degree part of -T^-(x) u(x), the sigma3 coordinate matching u.
template <Field F>
UniPoly<F> sigma3_positive_part(const ToeplitzMatrix<F>& tm, const UniPoly<F>& u) {
  const std::size_t n = tm.size();
  if (n == 1 || u.is_zero()) return {};
  // x^(n-1) T^-(x) = sum_{k=1}^{n-1} t_{-k} x^(n-1-k)
  std::vector<F> c(n - 1);
  for (std::size_t k = 1; k < n; ++k) c[n - 1 - k] = tm.t(-static_cast<std::ptrdiff_t>(k));
  const UniPoly<F> prod = UniPoly<F>(std::move(c)) * u;
  return -prod.window(n - 1, std::max(prod.size(), n - 1));
}

namespace detail {

template <Field F>
void require_members(const ToeplitzSymbols<F>& sym, const SyzygyBasis<F>& b, const char* route) {
  if constexpr (is_exact_v<F>) {
    if (!verify_syzygy(sym, b.rho1).is_zero() || !verify_syzygy(sym, b.rho2).is_zero())
      throw std::logic_error(std::string(route) + ": constructed generator is not a syzygy");
  }
}

template <Field F>
double division_tolerance() {
  return is_exact_v<F> ? 0.0 : 1e-9;
}

}  // namespace detail

/// rho1 = x^n sigma1 - (u, v, w) with S (u, v, w) = T~ x^n, and
/// rho2 = (-u', x^n - v', -w' - 1) with S (u', v', w') = 1.
template <Field F>
SyzygyBasis<F> generators_dense(const ToeplitzMatrix<F>& tm) {
  const auto sym = symbols(tm);
  const std::size_t n = sym.n;
  const auto pre = solve_S(sym, {sym.wrapped.shifted(n), UniPoly<F>::constant(field_traits<F>::one())});
  const auto xn = UniPoly<F>::x_pow(n);
  const auto one = UniPoly<F>::constant(field_traits<F>::one());
  SyzygyBasis<F> b;
  b.n = n;
  b.rho1 = {xn - pre[0].p, -pre[0].q, -pre[0].r};
  b.rho2 = {-pre[1].p, xn - pre[1].q, -pre[1].r - one};
  detail::require_members(sym, b, "generators_dense");
  return b;
}

struct EeaGeneratorOptions {
  bool unstable_ok = false;  // permit the float field
  EeaOptions eea;
};

/// Basis read off the extended Euclidean algorithm on p = x^(n-1) T(x), p' = x^(2n-1):
/// the rows l, l+1 with deg r_l = n-1 and deg r_(l+1) < n-1.
template <Field F>
SyzygyBasis<F> generators_eea(const ToeplitzMatrix<F>& tm, const EeaGeneratorOptions& opts = {}) {
  if constexpr (!is_exact_v<F>) {
    if (!opts.unstable_ok)
      throw UnsupportedFieldError("the Euclidean route is numerically unstable over float64; enable unstable-ok to use it");
  }
  const auto sym = symbols(tm);
  const std::size_t n = sym.n;
  if (sym.shifted.is_zero()) throw DegenerateSequenceError("Euclidean route: T is the zero matrix");
  const auto tr = extended_euclid(sym.shifted, UniPoly<F>::x_pow(2 * n - 1), static_cast<long long>(n) - 2, opts.eea);

  const std::size_t last = tr.r.size() - 1;
  const std::size_t l = last - 1;
  if (!(tr.r[l].degree() == n - 1)) {
    std::string seq;
    for (auto d : tr.degrees()) seq += (seq.empty() ? "" : ",") + d.str();
    throw DegenerateSequenceError("Euclidean route: remainder degrees (" + seq + ") skip " + std::to_string(n - 1));
  }
  if (!(tr.s[last].degree() == n)) throw DegenerateSequenceError("Euclidean route: cofactor of the closing row is not of degree n");

  const double tol = detail::division_tolerance<F>();
  const auto one = UniPoly<F>::constant(field_traits<F>::one());
  const auto xn = UniPoly<F>::x_pow(n);
  const auto wrap = UniPoly<F>::x_pow(2 * n) - one;
  const auto x = UniPoly<F>::x_pow(1);

  // Row l: u^ x^(n-1) T + B^ x^(2n-1) = x^(n-1) + A^.
  const F c1 = tr.r[l].leading();
  const F ic1 = field_traits<F>::one() / c1;
  const UniPoly<F> uh = tr.s[l] * ic1;
  const UniPoly<F> bh = tr.t[l] * ic1;
  const UniPoly<F> ah = tr.r[l] * ic1 - UniPoly<F>::x_pow(n - 1);
  const UniPoly<F> v2 = bh - x * ah;
  const UniPoly<F> w2 = exact_quotient(one - sym.wrapped * uh - v2.shifted(n), wrap, tol);

  // Row l+1: U x^(n-1) T + B2 x^(2n-1) = A2, U monic of degree n.
  const F c2 = tr.s[last].leading();
  const F ic2 = field_traits<F>::one() / c2;
  const UniPoly<F> uu = tr.s[last] * ic2;
  const UniPoly<F> b2 = tr.t[last] * ic2;
  const UniPoly<F> a2 = tr.r[last] * ic2;
  const UniPoly<F> v1 = b2 - x * a2;
  const UniPoly<F> w1 = -exact_quotient(sym.wrapped * uu + v1.shifted(n), wrap, tol);

  SyzygyBasis<F> b;
  b.n = n;
  b.rho1 = {uu, v1, w1};
  b.rho2 = {-uh, xn - v2, -w2 - one};
  detail::require_members(sym, b, "generators_eea");
  return b;
}

}  // namespace syzolve
