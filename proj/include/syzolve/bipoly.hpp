#pragma once

// Dense bivariate polynomials. Coefficient of x^i y^j lives at grid(i, j).

#include <algorithm>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "syzolve/field.hpp"
#include "syzolve/poly.hpp"

namespace syzolve {

template <Field F>
class BiPoly {
 public:
  BiPoly() = default;

  /// Row-major grid with rows = x exponents, columns = y exponents.
  BiPoly(std::size_t rows, std::size_t cols, std::vector<F> grid) : rows_(rows), cols_(cols), c_(std::move(grid)) {
    if (c_.size() != rows_ * cols_) throw DimensionError("bivariate grid has wrong number of entries");
    trim();
  }

  static BiPoly zeros(std::size_t rows, std::size_t cols) {
    BiPoly p;
    p.rows_ = rows;
    p.cols_ = cols;
    p.c_.assign(rows * cols, field_traits<F>::zero());
    return p;  // untrimmed on purpose: a writable canvas, see set()
  }

  static BiPoly monomial(F c, std::size_t i, std::size_t j) {
    BiPoly p = zeros(i + 1, j + 1);
    p.at(i, j) = std::move(c);
    p.trim();
    return p;
  }

  static BiPoly constant(F c) { return monomial(std::move(c), 0, 0); }

  /// Embeds a univariate polynomial in x (along_x) or in y.
  static BiPoly from_uni(const UniPoly<F>& p, bool along_x) {
    if (p.is_zero()) return {};
    std::vector<F> v(p.coeffs().begin(), p.coeffs().end());
    return along_x ? BiPoly(p.size(), 1, std::move(v)) : BiPoly(1, p.size(), std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  Degree deg_x() const { return rows_ == 0 ? Degree() : Degree(rows_ - 1); }
  Degree deg_y() const { return cols_ == 0 ? Degree() : Degree(cols_ - 1); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F coeff(std::size_t i, std::size_t j) const {
    return i < rows_ && j < cols_ ? c_[i * cols_ + j] : field_traits<F>::zero();
  }

  /// Mutable access on a canvas built by zeros(); call normalized() when done.
  F& at(std::size_t i, std::size_t j) { return c_[i * cols_ + j]; }

  BiPoly normalized() const {
    BiPoly p = *this;
    p.trim();
    return p;
  }

  /// True when all exponents satisfy i < bx and j < by.
  bool fits_box(std::size_t bx, std::size_t by) const { return rows_ <= bx && cols_ <= by; }

  /// x^dx y^dy * p
  BiPoly shifted(std::size_t dx, std::size_t dy) const {
    if (is_zero()) return {};
    BiPoly p = zeros(rows_ + dx, cols_ + dy);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) p.at(i + dx, j + dy) = c_[i * cols_ + j];
    p.trim();
    return p;
  }

  /// Block [x0, x0+w) x [y0, y0+h) re-based at the origin.
  BiPoly block(std::size_t x0, std::size_t y0, std::size_t w, std::size_t h) const {
    BiPoly p = zeros(w, h);
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = 0; j < h; ++j) p.at(i, j) = coeff(x0 + i, y0 + j);
    p.trim();
    return p;
  }

  /// Coefficients of the box [0,bx) x [0,by), ordered j*bx + i (y-major).
  std::vector<F> to_box_vector(std::size_t bx, std::size_t by) const {
    if (!fits_box(bx, by)) throw DimensionError("bivariate polynomial exceeds the target box");
    std::vector<F> v(bx * by, field_traits<F>::zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) v[j * bx + i] = c_[i * cols_ + j];
    return v;
  }

  static BiPoly from_box_vector(std::span<const F> v, std::size_t bx, std::size_t by) {
    if (v.size() != bx * by) throw DimensionError("box vector has wrong length");
    BiPoly p = zeros(bx, by);
    for (std::size_t i = 0; i < bx; ++i)
      for (std::size_t j = 0; j < by; ++j) p.at(i, j) = v[j * bx + i];
    p.trim();
    return p;
  }

  double max_norm() const {
    double m = 0.0;
    for (const auto& c : c_) m = std::max(m, magnitude(c));
    return m;
  }

  std::complex<double> eval(std::complex<double> x, std::complex<double> y) const {
    std::complex<double> acc = 0.0;
    for (std::size_t i = rows_; i-- > 0;) {
      std::complex<double> row = 0.0;
      for (std::size_t j = cols_; j-- > 0;) row = row * y + field_traits<F>::to_double(c_[i * cols_ + j]);
      acc = acc * x + row;
    }
    return acc;
  }

  BiPoly& operator+=(const BiPoly& o) { return combine(o, false); }
  BiPoly& operator-=(const BiPoly& o) { return combine(o, true); }
  BiPoly& operator*=(const F& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(BiPoly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend BiPoly operator*(BiPoly a, const F& s) { return a *= s; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.c_ == b.c_;
  }

 private:
  BiPoly& combine(const BiPoly& o, bool subtract) {
    const std::size_t r = std::max(rows_, o.rows_), c = std::max(cols_, o.cols_);
    if (r != rows_ || c != cols_) {
      BiPoly g = zeros(r, c);
      for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) g.at(i, j) = c_[i * cols_ + j];
      *this = std::move(g);
    }
    for (std::size_t i = 0; i < o.rows_; ++i)
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (subtract)
          c_[i * cols_ + j] -= o.c_[i * o.cols_ + j];
        else
          c_[i * cols_ + j] += o.c_[i * o.cols_ + j];
      }
    trim();
    return *this;
  }

  void trim() {
    auto row_zero = [&](std::size_t i) {
      for (std::size_t j = 0; j < cols_; ++j)
        if (!syzolve::is_zero(c_[i * cols_ + j])) return false;
      return true;
    };
    auto col_zero = [&](std::size_t j) {
      for (std::size_t i = 0; i < rows_; ++i)
        if (!syzolve::is_zero(c_[i * cols_ + j])) return false;
      return true;
    };
    std::size_t r = rows_, c = cols_;
    while (r > 0 && row_zero(r - 1)) --r;
    rows_ = r;  // row_zero/col_zero read through rows_/cols_
    while (c > 0 && col_zero(c - 1)) --c;
    if (r == 0 || c == 0) {
      rows_ = cols_ = 0;
      c_.clear();
      return;
    }
    if (c != cols_) {
      std::vector<F> g;
      g.reserve(r * c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) g.push_back(std::move(c_[i * cols_ + j]));
      c_ = std::move(g);
      cols_ = c;
    } else {
      c_.resize(r * c);
    }
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> c_;
};

/// Bivariate product via Kronecker substitution y -> x^D, D > deg_x(p) + deg_x(q);
/// inherits the univariate backend (FFT over float64, Karatsuba over exact fields).
template <Field F>
BiPoly<F> operator*(const BiPoly<F>& p, const BiPoly<F>& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const std::size_t stride = p.rows() + q.rows() - 1;
  auto flatten = [stride](const BiPoly<F>& a) {
    std::vector<F> v(stride * (a.cols() - 1) + a.rows(), field_traits<F>::zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) v[j * stride + i] = a.coeff(i, j);
    return UniPoly<F>(std::move(v));
  };
  UniPoly<F> prod = flatten(p) * flatten(q);
  const std::size_t rows = stride, cols = p.cols() + q.cols() - 1;
  BiPoly<F> out = BiPoly<F>::zeros(rows, cols);
  for (std::size_t k = 0; k < prod.size(); ++k) out.at(k % stride, k / stride) = prod[k];
  return out.normalized();
}

template <Field To, Field From>
BiPoly<To> map_field(const BiPoly<From>& p) {
  BiPoly<To> out = BiPoly<To>::zeros(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) out.at(i, j) = field_cast<To>(p.coeff(i, j));
  return out.normalized();
}

}  // namespace syzolve
