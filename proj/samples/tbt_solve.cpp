// Toeplitz-block-Toeplitz: the eight syzygies and a solve.

#include <cstdio>

#include "syzolve/syzolve.hpp"

using namespace syzolve;

int main() {
  const auto tm = random_tbt<Rational>(2, 3, 11);
  const auto set = generators_rho(tm);
  const auto sym = tbt_symbols(tm);
  bool ok = true;
  for (std::size_t k = 0; k < set.size(); ++k) ok = ok && apply_generators(sym, set.rho[k]).is_zero();
  std::printf("%zu generators, all syzygies: %s\n", set.size(), ok ? "yes" : "no");

  const auto g = random_vector<Rational>(tm.size(), 12);
  const auto sol = solve_tbt(tm, std::span<const Rational>(g));
  ok = ok && sol.u == dense_solve_tbt(tm, std::span<const Rational>(g));
  for (const auto& v : sol.u) std::printf("%s ", v.str().c_str());
  std::printf("\n");
  return ok ? 0 : 1;
}
