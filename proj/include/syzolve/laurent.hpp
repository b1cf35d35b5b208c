#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "syzolve/field.hpp"
#include "syzolve/poly.hpp"

namespace syzolve {

/// Sparse Laurent polynomial: exponent -> non-zero coefficient.
template <Field F>
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly from_poly(const UniPoly<F>& p) {
    LaurentPoly l;
    for (std::size_t i = 0; i < p.size(); ++i) l.add_term(static_cast<std::ptrdiff_t>(i), p[i]);
    return l;
  }

  void add_term(std::ptrdiff_t exponent, const F& c) {
    if (syzolve::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (syzolve::is_zero(it->second)) terms_.erase(it);
    }
  }

  F coeff(std::ptrdiff_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? field_traits<F>::zero() : it->second;
  }

  const std::map<std::ptrdiff_t, F>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Evaluation at a non-zero point of the float path.
  std::complex<double> eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_) acc += field_traits<F>::to_double(c) * std::pow(z, static_cast<double>(e));
    return acc;
  }

 private:
  std::map<std::ptrdiff_t, F> terms_;
};

template <Field F>
struct LaurentSplit {
  UniPoly<F> plus;        // exponents >= 0
  LaurentPoly<F> minus;   // exponents < 0
};

/// p = p+ + p-.
template <Field F>
LaurentSplit<F> laurent_split(const LaurentPoly<F>& p) {
  LaurentSplit<F> out;
  std::vector<F> plus;
  for (const auto& [e, c] : p.terms()) {
    if (e < 0) {
      out.minus.add_term(e, c);
    } else {
      const auto idx = static_cast<std::size_t>(e);
      if (plus.size() <= idx) plus.resize(idx + 1, field_traits<F>::zero());
      plus[idx] = c;
    }
  }
  out.plus = UniPoly<F>(std::move(plus));
  return out;
}

/// x^k * p for a Laurent polynomial whose lowest exponent is >= -k.
template <Field F>
UniPoly<F> shift_to_poly(const LaurentPoly<F>& p, std::size_t k) {
  std::vector<F> v;
  for (const auto& [e, c] : p.terms()) {
    const std::ptrdiff_t s = e + static_cast<std::ptrdiff_t>(k);
    if (s < 0) throw DimensionError("shift does not clear negative exponent " + std::to_string(e));
    const auto idx = static_cast<std::size_t>(s);
    if (v.size() <= idx) v.resize(idx + 1, field_traits<F>::zero());
    v[idx] = c;
  }
  return UniPoly<F>(std::move(v));
}

}  // namespace syzolve
