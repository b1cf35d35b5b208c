// Solve a small Toeplitz system exactly through its syzygy basis, then a float one.

#include <cstdio>

#include "syzolve/syzolve.hpp"

using namespace syzolve;

int main() {
  // T = [[2, 1], [3, 2]], diagonals t_{-1}, t_0, t_1.
  const ToeplitzMatrix<Rational> tm(2, {Rational(1), Rational(2), Rational(3)});
  const std::vector<Rational> g{Rational(1), Rational(0)};

  const auto basis = generators_eea(tm);
  std::printf("rho1.u degree %s, rho2.v degree %s\n", basis.rho1.u.degree().str().c_str(), basis.rho2.v.degree().str().c_str());

  const auto rep = solve(tm, std::span<const Rational>(g));
  std::printf("u = (%s, %s) via %s\n", rep.u[0].str().c_str(), rep.u[1].str().c_str(), std::string(to_string(rep.route)).c_str());

  const auto tf = random_toeplitz<double>(1000, 1);
  const auto gf = random_vector<double>(1000, 2);
  const auto rf = solve(tf, std::span<const double>(gf));
  const double res = scaled_residual(tf, std::span<const double>(rf.u), std::span<const double>(gf));
  std::printf("n = 1000 float64: scaled residual %.2e\n", res);
  return rep.u == std::vector<Rational>{Rational(2), Rational(-3)} && res < 1e-8 ? 0 : 1;
}
