#pragma once

// Coefficient fields: exact rationals (GMP) and float64.

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>

#include "syzolve/errors.hpp"

namespace syzolve {

class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(long long v) : q_(static_cast<long>(v)) {}
  Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "7", "-3/14" or a finite decimal such as "0.25" (exact).
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    try {
      if (auto slash = s.find('/'); slash != std::string::npos) {
        mpz_class num(s.substr(0, slash), 10);
        mpz_class den(s.substr(slash + 1), 10);
        return Rational(num, den);
      }
      auto e = s.find_first_of("eE");
      long exp10 = 0;
      if (e != std::string::npos) {
        exp10 = std::stol(s.substr(e + 1));
        s = s.substr(0, e);
      }
      if (auto dot = s.find('.'); dot != std::string::npos) {
        exp10 -= static_cast<long>(s.size() - dot - 1);
        s.erase(dot, 1);
      }
      if (s == "-" || s == "+" || s.empty()) throw ParseError("malformed rational literal '" + std::string(text) + "'");
      if (s.front() == '+') s.erase(0, 1);
      mpz_class num(s, 10);
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
      return exp10 >= 0 ? Rational(num * scale, 1) : Rational(num, scale);
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed rational literal '" + std::string(text) + "'");
    } catch (const std::out_of_range&) {
      throw ParseError("malformed rational literal '" + std::string(text) + "'");
    }
  }

  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  const mpq_class& get() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class q_;
};

template <class F>
struct field_traits;

template <>
struct field_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "rational";
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static double magnitude(const Rational& a) { return std::fabs(a.to_double()); }
  static double to_double(const Rational& a) { return a.to_double(); }
  static Rational parse(std::string_view s) { return Rational::parse(s); }
  static std::string format(const Rational& a) { return a.str(); }
};

template <>
struct field_traits<double> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "float64";
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double a) { return a == 0.0; }
  static double magnitude(double a) { return std::fabs(a); }
  static double to_double(double a) { return a; }
  static double parse(std::string_view s) {
    if (s.find('/') != std::string_view::npos) return Rational::parse(s).to_double();
    std::string str(s);
    char* end = nullptr;
    double v = std::strtod(str.c_str(), &end);
    if (str.empty() || end != str.c_str() + str.size() || !std::isfinite(v))
      throw ParseError("malformed float literal '" + str + "'");
    return v;
  }
  static std::string format(double a) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return buf;
  }
};

template <class F>
concept Field = requires(const F& a, const F& b) {
  { field_traits<F>::exact } -> std::convertible_to<bool>;
  { field_traits<F>::zero() } -> std::same_as<F>;
  { field_traits<F>::is_zero(a) } -> std::same_as<bool>;
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
};

template <Field F>
inline constexpr bool is_exact_v = field_traits<F>::exact;

template <Field F>
bool is_zero(const F& a) {
  return field_traits<F>::is_zero(a);
}

template <Field F>
double magnitude(const F& a) {
  return field_traits<F>::magnitude(a);
}

/// Field conversion used when mapping exact results onto the float path.
template <Field To, Field From>
To field_cast(const From& a) {
  if constexpr (std::is_same_v<To, From>) {
    return a;
  } else if constexpr (std::is_same_v<To, double>) {
    return field_traits<From>::to_double(a);
  } else {
    static_assert(std::is_same_v<To, Rational> && std::is_same_v<From, double>);
    mpq_class q(a);
    return Rational(q);
  }
}

}  // namespace syzolve
