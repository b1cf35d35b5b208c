#pragma once

#include <initializer_list>
#include <vector>

#include "syzolve/syzolve.hpp"

namespace testutil {

using syzolve::Rational;
using Q = Rational;
using QPoly = syzolve::UniPoly<Rational>;

inline QPoly P(std::initializer_list<long long> c) {
  std::vector<Q> v;
  for (long long x : c) v.emplace_back(x);
  return QPoly(std::move(v));
}

inline std::vector<Q> V(std::initializer_list<long long> c) {
  std::vector<Q> v;
  for (long long x : c) v.emplace_back(x);
  return v;
}

/// Diagonals t_{-n+1} .. t_{n-1}.
inline syzolve::ToeplitzMatrix<Q> TQ(std::size_t n, std::initializer_list<long long> d) { return {n, V(d)}; }

inline QPoly X(std::size_t k) { return QPoly::x_pow(k); }

}  // namespace testutil
