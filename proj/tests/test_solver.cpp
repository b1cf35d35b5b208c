#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace syzolve;
using namespace testutil;

TEST(ParticularSolution, Values) {
  EXPECT_TRUE(particular_solution<Q>(std::span<const Q>(V({0, 0})), 2).is_zero());
  EXPECT_EQ(particular_solution<Q>(std::span<const Q>(V({1})), 1), (SyzygyVec3<Q>{{}, X(1), P({-1})}));
  EXPECT_EQ(particular_solution<Q>(std::span<const Q>(V({1, 1})), 2), (SyzygyVec3<Q>{{}, P({0, 0, 1, 1}), P({-1, -1})}));
}

TEST(ParticularSolution, IsAnElementOfTheAffineModule) {
  const auto tm = random_toeplitz<Q>(6, 1);
  const auto g = random_vector<Q>(6, 2);
  EXPECT_EQ(verify_syzygy(tm, particular_solution<Q>(std::span<const Q>(g), 6)), QPoly(g));
}

TEST(Solve, IdentityReturnsRightHandSide) {
  const auto g = V({3, -1, 4});
  for (Route r : {Route::eea, Route::dense_generators}) {
    SolveOptions o;
    o.route = r;
    EXPECT_EQ(solve(ToeplitzMatrix<Q>::identity(3), std::span<const Q>(g), o).u, g);
  }
}

TEST(Solve, SmallFixture) {
  const auto tm = TQ(2, {1, 2, 3});
  const auto rep = solve(tm, std::span<const Q>(V({1, 0})));
  EXPECT_EQ(rep.u, V({2, -3}));
  EXPECT_EQ(rep.residual_norm, 0.0);
  EXPECT_EQ(solve(tm, std::span<const Q>(V({0, 0}))).u, V({0, 0}));
}

TEST(Solve, SingularMatrix) {
  const auto tm = TQ(2, {4, 2, 1});
  const auto g = V({1, 0});
  SolveOptions dense;
  dense.route = Route::dense_generators;
  EXPECT_THROW(solve(tm, std::span<const Q>(g), dense), SingularMatrixError);
  EXPECT_THROW(solve(tm, std::span<const Q>(g)), SingularMatrixError);
  SolveOptions strict;
  strict.fallback = false;
  EXPECT_THROW(solve(TQ(2, {1, 1, 1}), std::span<const Q>(g), strict), DegenerateSequenceError);
}

TEST(Solve, FallbackReachesDenseRoute) {
  const auto tm = TQ(2, {1, 1, 1});
  const auto g = V({1, 2});
  // The Euclidean route is degenerate here, the dense route then reports the singular matrix.
  EXPECT_THROW(compute_basis(tm), SingularMatrixError);
  EXPECT_THROW(solve(tm, std::span<const Q>(g)), SingularMatrixError);
  const auto ok = compute_basis(ToeplitzMatrix<Q>::identity(2));
  EXPECT_FALSE(ok.fell_back);
  EXPECT_EQ(ok.route, Route::eea);
}

TEST(Solve, FloatDefaultsToDenseRoute) {
  const auto tm = random_toeplitz<double>(64, 3);
  const auto g = random_vector<double>(64, 4);
  const auto rep = solve(tm, std::span<const double>(g));
  EXPECT_TRUE(rep.fell_back);
  EXPECT_EQ(rep.route, Route::dense_generators);
  EXPECT_LT(scaled_residual(tm, std::span<const double>(rep.u), std::span<const double>(g)), 1e-12);
  SolveOptions o;
  o.unstable_ok = true;
  const auto small = random_toeplitz<double>(8, 3);
  const auto g8 = random_vector<double>(8, 4);
  const auto r8 = solve(small, std::span<const double>(g8), o);
  EXPECT_FALSE(r8.fell_back);
  EXPECT_LT(scaled_residual(small, std::span<const double>(r8.u), std::span<const double>(g8)), 1e-10);
  // Larger float instances may break down on the Euclidean route; the fallback still answers.
  const auto big = solve(tm, std::span<const double>(g), o);
  EXPECT_LT(scaled_residual(tm, std::span<const double>(big.u), std::span<const double>(g)), 1e-12);
}

TEST(Solve, DimensionMismatch) {
  EXPECT_THROW(solve(TQ(2, {1, 2, 3}), std::span<const Q>(V({1}))), DimensionError);
}

TEST(Solve, LowDegreeRepresentativeIsUnique) {
  for (std::size_t n : {1, 3, 7, 12}) {
    const auto tm = random_toeplitz<Q>(n, 20 + n);
    const auto g = random_vector<Q>(n, 30 + n);
    const auto b = generators_dense(tm);
    const auto p = particular_solution<Q>(std::span<const Q>(g), n);
    const auto r1 = reduce_vec3(p, b), r2 = reduce_vec3(p + b.rho1, b), r3 = reduce_vec3(p - b.rho2 - b.rho2, b);
    EXPECT_EQ(r1, r2);
    EXPECT_EQ(r1, r3);
    EXPECT_LT(r1.degree(), n);
  }
}

TEST(Solve, CompleteSolutionHasLowDegree) {
  for (std::size_t n : {1, 4, 9}) {
    const auto tm = random_toeplitz<Q>(n, 60 + n);
    const auto g = random_vector<Q>(n, 70 + n);
    const auto u = dense_solve(tm, std::span<const Q>(g));
    const auto s = complete_solution(tm, std::span<const Q>(u), std::span<const Q>(g));
    EXPECT_LT(s.degree(), n);
    EXPECT_EQ(verify_syzygy(tm, s), QPoly(g));
    EXPECT_EQ(reduce_vec3(particular_solution<Q>(std::span<const Q>(g), n), generators_dense(tm)), s);
  }
}

TEST(Solve, AgreesWithGaussJordan) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 1 + seed % 10;
    const auto tm = random_toeplitz<Q>(n, 100 + seed);
    const auto g = random_vector<Q>(n, 200 + seed);
    const auto ref = oracle::gauss_solve(oracle::dense_toeplitz(oracle::Vec(tm.diagonals().begin(), tm.diagonals().end()), n), g);
    ASSERT_TRUE(ref.has_value());
    EXPECT_EQ(solve(tm, std::span<const Q>(g)).u, *ref);
  }
}

TEST(InterpolationCheck, Values) {
  const auto id = ToeplitzMatrix<Q>::identity(2);
  const auto bf = map_field<double>(generators_dense(id));
  EXPECT_LT(interpolation_check(map_field<double>(id), bf), 1e-12);
  EXPECT_THROW(interpolation_check(id, generators_dense(id)), UnsupportedFieldError);

  const auto tm = random_toeplitz<Q>(8, 3);
  const auto tf = map_field<double>(tm);
  auto b = map_field<double>(generators_dense(tm));
  EXPECT_LT(interpolation_check(tf, b), 1e-9);

  std::vector<double> u(b.rho1.u.coeffs().begin(), b.rho1.u.coeffs().end());
  u[2] += 1e-3;
  b.rho1.u = UniPoly<double>(u);
  double min_abs = 1e300;
  for (const auto& z : eval_at_roots_of_unity(symbols(tf).wrapped, 16)) min_abs = std::min(min_abs, std::abs(z));
  EXPECT_GE(interpolation_check(tf, b), 0.999e-3 * min_abs);
}

TEST(Routes, ParseAndPrint) {
  EXPECT_EQ(parse_route("eea"), Route::eea);
  EXPECT_EQ(parse_route("dense"), Route::dense_generators);
  EXPECT_EQ(parse_route("dense-generators"), Route::dense_generators);
  EXPECT_EQ(to_string(Route::eea), "eea");
  EXPECT_THROW(parse_route("fast"), ParseError);
}
