#pragma once

// Dense univariate polynomials over a coefficient field.

#include <algorithm>
#include <cassert>
#include <complex>
#include <compare>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "syzolve/errors.hpp"
#include "syzolve/fft.hpp"
#include "syzolve/field.hpp"

namespace syzolve {

/// Polynomial degree with a distinct -infinity for the zero polynomial.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr explicit Degree(std::size_t d) : v_(static_cast<long long>(d)) {}

  static constexpr Degree neg_inf() { return Degree(); }
  constexpr bool is_neg_inf() const { return v_ == kNegInf; }

  std::size_t value() const {
    if (is_neg_inf()) throw std::logic_error("degree of the zero polynomial has no value");
    return static_cast<std::size_t>(v_);
  }

  std::string str() const { return is_neg_inf() ? "-inf" : std::to_string(v_); }

  friend constexpr bool operator==(Degree, Degree) = default;
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) { return a.v_ <=> b.v_; }

  template <std::integral I>
  friend constexpr bool operator==(Degree a, I d) {
    return !a.is_neg_inf() && a.v_ == static_cast<long long>(d);
  }
  template <std::integral I>
  friend constexpr std::strong_ordering operator<=>(Degree a, I d) {
    if (a.is_neg_inf()) return std::strong_ordering::less;
    return a.v_ <=> static_cast<long long>(d);
  }

  /// Degree of a product: -inf absorbs.
  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return Degree();
    Degree r;
    r.v_ = a.v_ + b.v_;
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, Degree d) { return os << d.str(); }

 private:
  static constexpr long long kNegInf = std::numeric_limits<long long>::min();
  long long v_ = kNegInf;
};

template <Field F>
class UniPoly {
 public:
  using value_type = F;

  UniPoly() = default;
  explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { strip(); }
  UniPoly(std::initializer_list<F> coeffs) : c_(coeffs) { strip(); }

  static UniPoly constant(F c) { return UniPoly(std::vector<F>{std::move(c)}); }

  static UniPoly monomial(F c, std::size_t k) {
    if (syzolve::is_zero(c)) return {};
    std::vector<F> v(k + 1, field_traits<F>::zero());
    v[k] = std::move(c);
    return UniPoly(std::move(v));
  }

  static UniPoly x_pow(std::size_t k) { return monomial(field_traits<F>::one(), k); }

  Degree degree() const { return c_.empty() ? Degree() : Degree(c_.size() - 1); }
  bool is_zero() const { return c_.empty(); }
  /// Number of stored coefficients (degree + 1, or 0).
  std::size_t size() const { return c_.size(); }

  std::span<const F> coeffs() const { return c_; }
  const F& operator[](std::size_t i) const { return c_[i]; }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_traits<F>::zero(); }
  const F& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  /// Drops trailing coefficients with |c| <= eps * max|c|. Never applied implicitly.
  UniPoly trimmed(double eps) const {
    const double bound = eps * max_norm();
    std::vector<F> v = c_;
    while (!v.empty() && magnitude(v.back()) <= bound) v.pop_back();
    return UniPoly(std::move(v));
  }

  /// x^k * p
  UniPoly shifted(std::size_t k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<F> v(k, field_traits<F>::zero());
    v.insert(v.end(), c_.begin(), c_.end());
    return UniPoly(std::move(v));
  }

  /// p mod x^k
  UniPoly truncated(std::size_t k) const {
    if (k >= c_.size()) return *this;
    return UniPoly(std::vector<F>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k)));
  }

  /// Coefficients lo..hi-1 re-based at exponent 0.
  UniPoly window(std::size_t lo, std::size_t hi) const {
    std::vector<F> v;
    if (lo < hi) v.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) v.push_back(coeff(i));
    return UniPoly(std::move(v));
  }

  /// Dense coefficient vector of length len (zero padded); requires size() <= len.
  std::vector<F> to_vector(std::size_t len) const {
    if (c_.size() > len) throw DimensionError("polynomial of degree " + degree().str() + " does not fit " + std::to_string(len) + " slots");
    std::vector<F> v(c_);
    v.resize(len, field_traits<F>::zero());
    return v;
  }

  F operator()(const F& x) const {
    F acc = field_traits<F>::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  double max_norm() const {
    double m = 0.0;
    for (const auto& c : c_) m = std::max(m, magnitude(c));
    return m;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_traits<F>::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    strip();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_traits<F>::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    strip();
    return *this;
  }
  UniPoly& operator*=(const F& s) {
    if (syzolve::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    strip();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend UniPoly operator*(UniPoly a, const F& s) { return a *= s; }
  friend UniPoly operator*(const F& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void strip() {
    while (!c_.empty() && syzolve::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

template <Field F>
std::ostream& operator<<(std::ostream& os, const UniPoly<F>& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (is_zero(p[i])) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << field_traits<F>::format(p[i]) << ")";
    if (i > 0) os << "x^" << i;
  }
  return os;
}

// ---------------------------------------------------------------------------
// Multiplication backends

namespace detail {

inline constexpr std::size_t kKaratsubaThreshold = 33;  // sizes above this (degree > 32) split

template <class R>
void mul_acc(R& acc, const R& a, const R& b) {
  acc += a * b;
}
inline void mul_acc(mpz_class& acc, const mpz_class& a, const mpz_class& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

template <class R>
void add_into(std::vector<R>& out, std::size_t offset, const std::vector<R>& src) {
  if (out.size() < offset + src.size()) out.resize(offset + src.size(), R(0));
  for (std::size_t i = 0; i < src.size(); ++i) out[offset + i] += src[i];
}

template <class R>
std::vector<R> schoolbook(std::span<const R> a, std::span<const R> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<R> out(a.size() + b.size() - 1, R(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) mul_acc(out[i + j], a[i], b[j]);
  return out;
}

template <class R>
std::vector<R> karatsuba(std::span<const R> a, std::span<const R> b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return {};
  if (b.size() <= kKaratsubaThreshold) return schoolbook(a, b);

  std::vector<R> out(a.size() + b.size() - 1, R(0));
  if (a.size() >= 2 * b.size()) {
    for (std::size_t off = 0; off < a.size(); off += b.size()) {
      const std::size_t len = std::min(b.size(), a.size() - off);
      add_into(out, off, karatsuba(a.subspan(off, len), b));
    }
    return out;
  }

  const std::size_t h = (a.size() + 1) / 2;
  auto a0 = a.first(h), a1 = a.subspan(h);
  auto b0 = b.first(std::min(h, b.size()));
  auto b1 = b.size() > h ? b.subspan(h) : std::span<const R>{};
  if (b1.empty()) {
    add_into(out, 0, karatsuba(a0, b));
    add_into(out, h, karatsuba(a1, b));
    return out;
  }

  auto z0 = karatsuba(a0, b0);
  auto z2 = karatsuba(a1, b1);
  std::vector<R> sa(a0.begin(), a0.end()), sb(b0.begin(), b0.end());
  for (std::size_t i = 0; i < a1.size(); ++i) sa[i] += a1[i];
  for (std::size_t i = 0; i < b1.size(); ++i) sb[i] += b1[i];
  auto z1 = karatsuba(std::span<const R>(sa), std::span<const R>(sb));
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
  add_into(out, 0, z0);
  add_into(out, h, z1);
  add_into(out, 2 * h, z2);
  out.resize(a.size() + b.size() - 1);
  return out;
}

// Clears denominators, multiplies over Z, then divides once per output coefficient.
inline UniPoly<Rational> rational_mul(const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto integerize = [](const UniPoly<Rational>& p, mpz_class& den) {
    den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get().get_den_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) {
      mpz_class v;
      mpz_divexact(v.get_mpz_t(), den.get_mpz_t(), c.get().get_den_mpz_t());
      v *= c.get().get_num();
      out.push_back(std::move(v));
    }
    return out;
  };
  mpz_class da, db;
  auto ia = integerize(a, da);
  auto ib = integerize(b, db);
  auto prod = karatsuba(std::span<const mpz_class>(ia), std::span<const mpz_class>(ib));
  const mpz_class den = da * db;
  std::vector<Rational> c;
  c.reserve(prod.size());
  for (auto& v : prod) c.emplace_back(v, den);
  return UniPoly<Rational>(std::move(c));
}

inline UniPoly<double> fft_mul(const UniPoly<double>& a, const UniPoly<double>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return UniPoly<double>(fft::convolve_real(a.coeffs(), b.coeffs()));
}

}  // namespace detail

/// Product: FFT over float64, Karatsuba (schoolbook at degree <= 32) over exact fields.
template <Field F>
UniPoly<F> operator*(const UniPoly<F>& a, const UniPoly<F>& b) {
  if constexpr (std::is_same_v<F, double>) {
    return detail::fft_mul(a, b);
  } else if constexpr (std::is_same_v<F, Rational>) {
    return detail::rational_mul(a, b);
  } else {
    return UniPoly<F>(detail::karatsuba(a.coeffs(), b.coeffs()));
  }
}

/// Reference schoolbook product, any field. Used to cross-check the fast paths.
template <Field F>
UniPoly<F> schoolbook_mul(const UniPoly<F>& a, const UniPoly<F>& b) {
  return UniPoly<F>(detail::schoolbook(a.coeffs(), b.coeffs()));
}

template <Field F>
UniPoly<F> mul_truncated(const UniPoly<F>& a, const UniPoly<F>& b, std::size_t k) {
  return (a.truncated(k) * b.truncated(k)).truncated(k);
}

/// x^d * p(1/x). Requires deg p <= d.
template <Field F>
UniPoly<F> reverse(const UniPoly<F>& p, std::size_t d) {
  if (p.degree() > d) throw DimensionError("reverse window " + std::to_string(d) + " smaller than degree " + p.degree().str());
  std::vector<F> v = p.to_vector(d + 1);
  std::reverse(v.begin(), v.end());
  return UniPoly<F>(std::move(v));
}

template <Field F>
struct DivRem {
  UniPoly<F> quotient;
  UniPoly<F> remainder;
};

/// Scalar long division a = q*b + r, deg r < deg b. The remainder is read off the
/// low part of the running dividend, so its degree bound holds structurally.
template <Field F>
DivRem<F> divrem(const UniPoly<F>& a, const UniPoly<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly<F>{}, a};
  const std::size_t db = b.degree().value();
  const std::size_t da = a.degree().value();
  std::vector<F> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<F> q(da - db + 1, field_traits<F>::zero());
  const F inv_lead = field_traits<F>::one() / b.leading();
  for (std::size_t k = da - db + 1; k-- > 0;) {
    F c = rem[k + db] * inv_lead;
    if (is_zero(c)) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b[j];
    q[k] = std::move(c);
  }
  rem.resize(db);
  return {UniPoly<F>(std::move(q)), UniPoly<F>(std::move(rem))};
}

/// Division that must leave no remainder (checked exactly over exact fields).
template <Field F>
UniPoly<F> exact_quotient(const UniPoly<F>& a, const UniPoly<F>& b, double tol = 0.0) {
  auto [q, r] = divrem(a, b);
  if constexpr (is_exact_v<F>) {
    if (!r.is_zero()) throw std::logic_error("exact polynomial division left a non-zero remainder");
  } else {
    if (r.max_norm() > tol * std::max(1.0, a.max_norm()))
      throw NumericalBreakdownError("exact polynomial division left remainder " + std::to_string(r.max_norm()));
  }
  return q;
}

template <Field To, Field From>
UniPoly<To> map_field(const UniPoly<From>& p) {
  std::vector<To> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.push_back(field_cast<To>(c));
  return UniPoly<To>(std::move(v));
}

/// Values p(w^k), w = exp(-2 pi i / N), k = 0..N-1 (numpy.fft order). Exact fields have no roots of unity.
template <Field F>
std::vector<std::complex<double>> eval_at_roots_of_unity(const UniPoly<F>& p, std::size_t big_n) {
  if constexpr (is_exact_v<F>) {
    throw UnsupportedFieldError(std::string("field '") + std::string(field_traits<F>::name) + "' has no roots of unity");
  } else {
    if (big_n == 0) throw DimensionError("number of roots of unity must be positive");
    // Fold modulo x^N - 1; values at N-th roots are unchanged.
    std::vector<std::complex<double>> a(big_n);
    for (std::size_t i = 0; i < p.size(); ++i) a[i % big_n] += field_traits<F>::to_double(p[i]);
    fft::transform(a);
    return a;
  }
}

}  // namespace syzolve
