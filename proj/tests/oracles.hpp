#pragma once

// Reference implementations used only by the tests. Deliberately naive and written
// without the library's kernels: plain convolution, Gauss-Jordan over mpq, dense
// assembly straight from the index rules.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "syzolve/field.hpp"

namespace oracle {

using syzolve::Rational;
using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

inline Vec strip(Vec v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
  return v;
}

inline Vec conv(const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return strip(c);
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return strip(c);
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return strip(c);
}

/// T_ij = t_{i-j}, diagonals stored t_{-n+1} .. t_{n-1}.
inline Mat dense_toeplitz(const Vec& diags, std::size_t n) {
  Mat a(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = diags[i + n - 1 - j];
  return a;
}

/// Entry ((a1, a2), (b1, b2)) = t_{a1-b1, a2-b2}; vector index a2*m + a1.
inline Mat dense_tbt(const Vec& grid, std::size_t m, std::size_t n) {
  const std::size_t k = m * n, cols = 2 * n - 1;
  Mat a(k, Vec(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t i = r % m + m - 1 - c % m;  // (a1 - b1) + m - 1
      const std::size_t j = r / m + n - 1 - c / m;
      a[r][c] = grid[i * cols + j];
    }
  return a;
}

inline Vec matvec(const Mat& a, const Vec& x) {
  Vec y(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

/// Gauss-Jordan with first non-zero pivot; nullopt when singular.
inline std::optional<Vec> gauss_solve(Mat a, Vec b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    const Rational inv = Rational(1) / a[c][c];
    for (std::size_t j = c; j < n; ++j) a[c][j] *= inv;
    b[c] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  return b;
}

inline std::size_t rank(Mat a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Polynomial long division by a scalar polynomial, remainder taken from the low part.
inline std::pair<Vec, Vec> divide(Vec a, const Vec& b) {
  a = strip(a);
  const Vec bs = strip(b);
  if (a.size() < bs.size()) return {{}, a};
  Vec q(a.size() - bs.size() + 1, Rational(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = a[k + bs.size() - 1] / bs.back();
    q[k] = c;
    for (std::size_t j = 0; j < bs.size(); ++j) a[k + j] -= c * bs[j];
  }
  a.resize(bs.size() - 1);
  return {strip(q), strip(a)};
}

}  // namespace oracle
