#pragma once

// End-to-end Toeplitz solve: basis, particular solution (0, x^n g, -g), reduction,
// read u off the sigma1 coordinate.

#include <algorithm>
#include <chrono>
#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syzolve/errors.hpp"
#include "syzolve/field.hpp"
#include "syzolve/poly.hpp"
#include "syzolve/polydiv.hpp"
#include "syzolve/syzygy.hpp"
#include "syzolve/toeplitz.hpp"

namespace syzolve {

enum class Route { eea, dense_generators };

inline std::string_view to_string(Route r) { return r == Route::eea ? "eea" : "dense-generators"; }

inline Route parse_route(std::string_view s) {
  if (s == "eea") return Route::eea;
  if (s == "dense" || s == "dense-generators") return Route::dense_generators;
  throw ParseError("unknown route '" + std::string(s) + "' (expected eea or dense)");
}

struct SolveOptions {
  Route route = Route::eea;
  bool fallback = true;      // eea -> dense-generators on degeneracy
  bool unstable_ok = false;  // allow the Euclidean route over float64
};

template <Field F>
struct SolveReport {
  std::vector<F> u;
  double residual_norm = 0.0;  // max-norm of T u - g
  Route route = Route::eea;    // route actually used
  bool fell_back = false;
  std::map<std::string, double> timings;  // seconds per phase
};

template <Field F>
struct BasisResult {
  SyzygyBasis<F> basis;
  Route route = Route::eea;
  bool fell_back = false;
};

namespace detail {

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace detail

template <Field F>
SyzygyVec3<F> particular_solution(std::span<const F> g, std::size_t n) {
  if (g.size() != n) throw DimensionError("right-hand side has length " + std::to_string(g.size()) + ", expected " + std::to_string(n));
  UniPoly<F> gp(std::vector<F>(g.begin(), g.end()));
  return {UniPoly<F>{}, gp.shifted(n), -gp};
}

template <Field F>
BasisResult<F> compute_basis(const ToeplitzMatrix<F>& tm, const SolveOptions& opts = {}) {
  if (opts.route == Route::dense_generators) return {generators_dense(tm), Route::dense_generators, false};
  try {
    return {generators_eea(tm, EeaGeneratorOptions{opts.unstable_ok, {}}), Route::eea, false};
  } catch (const DegenerateSequenceError&) {
    if (!opts.fallback) throw;
  } catch (const UnsupportedFieldError&) {
    if (!opts.fallback) throw;
  } catch (const NumericalBreakdownError&) {
    if (!opts.fallback) throw;
  }
  return {generators_dense(tm), Route::dense_generators, true};
}

template <Field F>
double residual_norm(const ToeplitzMatrix<F>& tm, std::span<const F> u, std::span<const F> g) {
  const auto tu = matvec(tm, u);
  double r = 0.0;
  for (std::size_t i = 0; i < tu.size(); ++i) r = std::max(r, magnitude(F(tu[i] - g[i])));
  return r;
}

/// Solves T u = g given a precomputed basis.
template <Field F>
std::vector<F> solve_with_basis(const SyzygyBasis<F>& basis, std::span<const F> g) {
  const auto red = reduce_vec3(particular_solution(g, basis.n), basis, false);
  return red.u.to_vector(basis.n);
}

template <Field F>
SolveReport<F> solve(const ToeplitzMatrix<F>& tm, std::span<const F> g, const SolveOptions& opts = {}) {
  const std::size_t n = tm.size();
  if (g.size() != n) throw DimensionError("right-hand side has length " + std::to_string(g.size()) + ", expected " + std::to_string(n));
  SolveReport<F> rep;
  detail::Stopwatch clock;
  const auto br = compute_basis(tm, opts);
  rep.timings["basis"] = clock.lap();
  rep.route = br.route;
  rep.fell_back = br.fell_back;
  rep.u = solve_with_basis(br.basis, g);
  rep.timings["reduce"] = clock.lap();
  rep.residual_norm = residual_norm(tm, std::span<const F>(rep.u), g);
  rep.timings["residual"] = clock.lap();
  rep.timings["total"] = rep.timings["basis"] + rep.timings["reduce"] + rep.timings["residual"];
  return rep;
}

/// Scaled residual |T u - g| / (|T| |u| + |g|), max-norms.
template <Field F>
double scaled_residual(const ToeplitzMatrix<F>& tm, std::span<const F> u, std::span<const F> g) {
  double nu = 0.0, ng = 0.0;
  for (const auto& v : u) nu = std::max(nu, magnitude(v));
  for (const auto& v : g) ng = std::max(ng, magnitude(v));
  const double denom = tm.norm_inf() * nu + ng;
  const double r = residual_norm(tm, u, g);
  return denom == 0.0 ? r : r / denom;
}

/// (u, v, w) in L(T~, x^n, x^2n - 1; g) with v, w of degree < n, from a solution u.
template <Field F>
SyzygyVec3<F> complete_solution(const ToeplitzMatrix<F>& tm, std::span<const F> u, std::span<const F> g) {
  const std::size_t n = tm.size();
  const auto sym = symbols(tm);
  const UniPoly<F> up(std::vector<F>(u.begin(), u.end()));
  const UniPoly<F> gp(std::vector<F>(g.begin(), g.end()));
  // g - T~ u = x^n v + (x^2n - 1) w: w sits in the top window, v in the middle one.
  const UniPoly<F> rest = gp - sym.wrapped * up;
  const UniPoly<F> w = rest.window(2 * n, 3 * n);
  const UniPoly<F> v = rest.window(n, 2 * n);
  SyzygyVec3<F> s{up, v, w};
  if constexpr (is_exact_v<F>) {
    if (verify_syzygy(sym, s) != gp) throw std::logic_error("complete_solution: u does not solve T u = g");
  }
  return s;
}

/// max over w in U_2n and both generators of |T~(w) u(w) + w^n v(w)|.
template <Field F>
double interpolation_check(const ToeplitzMatrix<F>& tm, const SyzygyBasis<F>& b) {
  if constexpr (is_exact_v<F>) {
    throw UnsupportedFieldError("interpolation check needs roots of unity; map the basis to float64 first");
  } else {
    const std::size_t n = tm.size();
    const auto sym = symbols(tm);
    const auto tv = eval_at_roots_of_unity(sym.wrapped, 2 * n);
    double worst = 0.0;
    for (const auto* g : {&b.rho1, &b.rho2}) {
      const auto uv = eval_at_roots_of_unity(g->u, 2 * n);
      const auto vv = eval_at_roots_of_unity(g->v, 2 * n);
      for (std::size_t j = 0; j < 2 * n; ++j) {
        const double sign = j % 2 == 0 ? 1.0 : -1.0;  // w_j^n = (-1)^j
        worst = std::max(worst, std::abs(tv[j] * uv[j] + sign * vv[j]));
      }
    }
    return worst;
  }
}

template <Field To, Field From>
SyzygyBasis<To> map_field(const SyzygyBasis<From>& b) {
  auto m = [](const SyzygyVec3<From>& s) {
    return SyzygyVec3<To>{map_field<To>(s.u), map_field<To>(s.v), map_field<To>(s.w)};
  };
  return {b.n, m(b.rho1), m(b.rho2)};
}

template <Field To, Field From>
ToeplitzMatrix<To> map_field(const ToeplitzMatrix<From>& tm) {
  std::vector<To> d;
  for (const auto& v : tm.diagonals()) d.push_back(field_cast<To>(v));
  return ToeplitzMatrix<To>(tm.size(), std::move(d));
}

}  // namespace syzolve
