#pragma once

// JSON instance files and seeded instance generation.
//   {"kind": "toeplitz", "n": 4, "diagonals": ["1", "-3/2", ...], "field": "rational"}
//   {"kind": "tbt", "m": 2, "n": 3, "diagonals": [[...], ...], "field": "float64"}
// Diagonals are listed low exponent first; the tbt grid has 2m-1 rows (x) of 2n-1 entries (y).

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "syzolve/errors.hpp"
#include "syzolve/field.hpp"
#include "syzolve/linalg.hpp"
#include "syzolve/tbt.hpp"
#include "syzolve/toeplitz.hpp"

namespace syzolve {

using json = nlohmann::json;

enum class FieldKind { rational, float64 };

inline FieldKind parse_field_kind(std::string_view s) {
  if (s == "rational") return FieldKind::rational;
  if (s == "float64") return FieldKind::float64;
  throw ParseError("unknown field '" + std::string(s) + "' (expected rational or float64)");
}

template <Field F>
FieldKind field_kind_of() {
  return is_exact_v<F> ? FieldKind::rational : FieldKind::float64;
}

using AnyInstance = std::variant<ToeplitzMatrix<Rational>, ToeplitzMatrix<double>, TbtMatrix<Rational>, TbtMatrix<double>>;

template <Field F>
json elems_to_json(std::span<const F> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(field_traits<F>::format(x));
  return a;
}

template <Field F>
std::vector<F> elems_from_json(const json& a, const std::string& what) {
  if (!a.is_array()) throw ParseError(what + ": expected an array");
  std::vector<F> v;
  v.reserve(a.size());
  for (const auto& e : a) {
    if (e.is_string()) {
      v.push_back(field_traits<F>::parse(e.get<std::string>()));
    } else if (e.is_number_integer()) {
      v.push_back(field_traits<F>::parse(std::to_string(e.get<long long>())));
    } else if (e.is_number_float() && !is_exact_v<F>) {
      v.push_back(field_traits<F>::parse(e.dump()));
    } else {
      throw ParseError(what + ": field elements must be strings");
    }
  }
  return v;
}

template <Field F>
json to_json(const ToeplitzMatrix<F>& tm) {
  return {{"kind", "toeplitz"}, {"n", tm.size()}, {"diagonals", elems_to_json<F>(tm.diagonals())}, {"field", field_traits<F>::name}};
}

template <Field F>
json to_json(const TbtMatrix<F>& tm) {
  json grid = json::array();
  const std::size_t cols = 2 * tm.n() - 1;
  for (std::size_t r = 0; r < 2 * tm.m() - 1; ++r) grid.push_back(elems_to_json<F>(tm.grid().subspan(r * cols, cols)));
  return {{"kind", "tbt"}, {"m", tm.m()}, {"n", tm.n()}, {"diagonals", grid}, {"field", field_traits<F>::name}};
}

namespace detail {

inline std::size_t positive_size(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 1)
    throw ParseError(std::string("instance: '") + key + "' must be a positive integer");
  return j[key].get<std::size_t>();
}

template <Field F>
AnyInstance instance_from_json(const json& j, const std::string& kind) {
  if (kind == "toeplitz") {
    const std::size_t n = positive_size(j, "n");
    auto d = elems_from_json<F>(j.at("diagonals"), "diagonals");
    if (d.size() != 2 * n - 1) throw ParseError("instance: n = " + std::to_string(n) + " needs " + std::to_string(2 * n - 1) + " diagonals");
    return ToeplitzMatrix<F>(n, std::move(d));
  }
  if (kind == "tbt") {
    const std::size_t m = positive_size(j, "m"), n = positive_size(j, "n");
    const json& g = j.at("diagonals");
    std::vector<F> flat;
    if (g.is_array() && !g.empty() && g.front().is_array()) {
      if (g.size() != 2 * m - 1) throw ParseError("instance: tbt grid needs 2m-1 rows");
      for (const auto& row : g) {
        auto r = elems_from_json<F>(row, "diagonals row");
        if (r.size() != 2 * n - 1) throw ParseError("instance: tbt grid rows need 2n-1 entries");
        flat.insert(flat.end(), r.begin(), r.end());
      }
    } else {
      flat = elems_from_json<F>(g, "diagonals");
      if (flat.size() != (2 * m - 1) * (2 * n - 1)) throw ParseError("instance: tbt grid has the wrong number of entries");
    }
    return TbtMatrix<F>(m, n, std::move(flat));
  }
  throw ParseError("instance: unknown kind '" + kind + "'");
}

}  // namespace detail

inline AnyInstance instance_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("instance: expected a JSON object");
    const auto kind = j.at("kind").get<std::string>();
    const auto field = parse_field_kind(j.value("field", std::string("rational")));
    return field == FieldKind::rational ? detail::instance_from_json<Rational>(j, kind) : detail::instance_from_json<double>(j, kind);
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

inline AnyInstance load_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

// ---- seeded generation ----

/// Deterministic draws on top of mt19937_64 (distribution objects are not portable).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long long integer(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(rng_() % span);
  }
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  template <Field F>
  F element() {
    if constexpr (is_exact_v<F>) {
      return F(integer(-9, 9));
    } else {
      return uniform(-1.0, 1.0);
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline constexpr int kResampleBudget = 100;

/// Random invertible Toeplitz matrix. Rationals: i.i.d. integers in [-9, 9], rejected
/// while singular. float64: t_k = U(-1,1)/(1+|k|)^2 off the diagonal and
/// t_0 = 1 + sum |t_k| + U(0,1), strictly diagonally dominant.
template <Field F>
ToeplitzMatrix<F> random_toeplitz(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DimensionError("random_toeplitz: n must be >= 1");
  Sampler s(seed);
  for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
    std::vector<F> d(2 * n - 1);
    if constexpr (is_exact_v<F>) {
      for (auto& v : d) v = s.element<F>();
      ToeplitzMatrix<F> tm(n, std::move(d));
      if (linalg::rank(tm.dense()) == n) return tm;
    } else {
      double off = 0.0;
      for (std::size_t k = 0; k < d.size(); ++k) {
        if (k == n - 1) continue;
        const double dist = std::fabs(static_cast<double>(k) - static_cast<double>(n - 1));
        d[k] = s.uniform(-1.0, 1.0) / ((1.0 + dist) * (1.0 + dist));
        off += std::fabs(d[k]);
      }
      d[n - 1] = 1.0 + off + s.unit();
      if (d[n - 1] > off) return ToeplitzMatrix<F>(n, std::move(d));
    }
  }
  throw SingularMatrixError("random_toeplitz: no invertible draw within " + std::to_string(kResampleBudget) + " tries");
}

/// TBT analogue of random_toeplitz, decay 1/(1+|i|+|j|)^2 on the float path.
template <Field F>
TbtMatrix<F> random_tbt(std::size_t m, std::size_t n, std::uint64_t seed) {
  if (m == 0 || n == 0) throw DimensionError("random_tbt: m, n must be >= 1");
  Sampler s(seed);
  const std::size_t rows = 2 * m - 1, cols = 2 * n - 1;
  for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
    std::vector<F> g(rows * cols);
    if constexpr (is_exact_v<F>) {
      for (auto& v : g) v = s.element<F>();
      TbtMatrix<F> tm(m, n, std::move(g));
      if (linalg::rank(tm.dense()) == m * n) return tm;
    } else {
      double off = 0.0;
      const std::size_t centre = (m - 1) * cols + (n - 1);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
          const std::size_t k = r * cols + c;
          if (k == centre) continue;
          const double dist = std::fabs(static_cast<double>(r) - static_cast<double>(m - 1)) +
                              std::fabs(static_cast<double>(c) - static_cast<double>(n - 1));
          g[k] = s.uniform(-1.0, 1.0) / ((1.0 + dist) * (1.0 + dist));
          off += std::fabs(g[k]);
        }
      g[centre] = 1.0 + off + s.unit();
      if (g[centre] > off) return TbtMatrix<F>(m, n, std::move(g));
    }
  }
  throw SingularMatrixError("random_tbt: no invertible draw within " + std::to_string(kResampleBudget) + " tries");
}

template <Field F>
std::vector<F> random_vector(std::size_t len, std::uint64_t seed) {
  Sampler s(seed);
  std::vector<F> v(len);
  for (auto& x : v) x = s.element<F>();
  return v;
}

}  // namespace syzolve
