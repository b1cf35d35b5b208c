#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace syzolve;
using namespace testutil;

namespace {

using B = BiPoly<Q>;

B mono(long long c, std::size_t i, std::size_t j) { return B::monomial(Q(c), i, j); }

TbtMatrix<Q> random_q(std::size_t m, std::size_t n, std::uint64_t seed) { return random_tbt<Q>(m, n, seed); }

}  // namespace

TEST(TbtSymbols, IdentityAndScalar) {
  EXPECT_EQ(tbt_symbols(TbtMatrix<Q>::identity(3, 2)).wrapped, B::constant(Q(1)));
  EXPECT_EQ(tbt_symbols(TbtMatrix<Q>(1, 1, V({7}))).wrapped, B::constant(Q(7)));
}

TEST(TbtSymbols, FourQuadrantIndexRule) {
  std::vector<Q> g(9, Q(0));
  g[0] = Q(1);  // t_{-1,-1}
  const TbtMatrix<Q> tm(2, 2, g);
  EXPECT_EQ(tm.t(-1, -1), Q(1));
  EXPECT_EQ(tbt_symbols(tm).wrapped, mono(1, 3, 3));
}

TEST(TbtMatvec, MatchesDenseOracle) {
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 2}, {3, 2}, {2, 5}}) {
    const auto tm = random_q(m, n, 10 * m + n);
    const auto u = random_vector<Q>(m * n, 3);
    EXPECT_EQ(tbt_matvec(tm, std::span<const Q>(u)), oracle::matvec(oracle::dense_tbt(oracle::Vec(tm.grid().begin(), tm.grid().end()), m, n), u));
  }
  const auto id = TbtMatrix<Q>::identity(2, 3);
  const auto u = V({1, 2, 3, 4, 5, 6});
  EXPECT_EQ(tbt_matvec(id, std::span<const Q>(u)), u);
  EXPECT_THROW(tbt_matvec(id, std::span<const Q>(V({1}))), DimensionError);
}

TEST(TbtMatvec, FirstColumn) {
  const auto tm = random_q(2, 3, 5);
  std::vector<Q> e(6, Q(0));
  e[0] = Q(1);
  const auto col = tbt_matvec(tm, std::span<const Q>(e));
  const auto d = tm.dense();
  for (std::size_t r = 0; r < 6; ++r) EXPECT_EQ(col[r], d(r, 0));
}

TEST(AssembleS9, RankChecks) {
  const auto s1 = assemble_S9(TbtMatrix<Q>::identity(1, 1));
  EXPECT_EQ(s1.rows(), 9u);
  EXPECT_EQ(linalg::rank(s1), 9u);
  EXPECT_LT(linalg::rank(assemble_S9(TbtMatrix<Q>(2, 2, std::vector<Q>(9, Q(0))))), 36u);
  EXPECT_EQ(linalg::rank(assemble_S9(random_q(2, 2, 8))), 36u);
}

TEST(SolveS9, MatchesAssembledSystem) {
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 3}, {3, 2}}) {
    const auto tm = random_q(m, n, 40 + m * n);
    const auto sym = tbt_symbols(tm);
    const auto rhs = B::from_box_vector(std::span<const Q>(random_vector<Q>(4 * m * n, 9)), 2 * m, 2 * n);
    const auto h = solve_S9(sym, {rhs});
    EXPECT_EQ(apply_generators(sym, h[0]), rhs);
    for (const auto& c : h[0]) EXPECT_TRUE(c.fits_box(m, n));
  }
}

TEST(GeneratorsRho, IdentityScalarCase) {
  const auto s = generators_rho(TbtMatrix<Q>::identity(1, 1));
  Vec9<Q> want;
  want[1] = mono(1, 1, 0);
  want[2] = mono(-1, 0, 0);
  want[0] = mono(-1, 0, 0);
  EXPECT_EQ(s.rho[2], want);
  EXPECT_EQ(s.size(), 8u);
}

TEST(GeneratorsRho, MembersAndRelation) {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto tm = random_q(m, n, 500 + 10 * m + n);
      const auto sym = tbt_symbols(tm);
      const auto s = generators_rho(tm);
      for (std::size_t k = 0; k < 8; ++k) EXPECT_TRUE(apply_generators(sym, s.rho[k]).is_zero()) << "rho" << k + 1;
      Vec9<Q> r4 = s.rho[2];
      r4[1] -= mono(1, m, 0);
      r4[2] += mono(1, 0, 0);
      r4[3] += mono(1, 0, n);
      r4[6] -= mono(1, 0, 0);
      EXPECT_EQ(r4, s.rho[3]);
    }
}

TEST(GeneratorsRho, ConstantGeneratorsDoNotDependOnT) {
  const auto a = generators_rho(random_q(2, 2, 1)), b = generators_rho(random_q(2, 2, 2));
  for (std::size_t k : {4, 5, 6, 7}) EXPECT_EQ(a.rho[k], b.rho[k]);
}

TEST(SolveTbt, Values) {
  const auto g = V({1, -2, 3, 5, 0, 7});
  EXPECT_EQ(solve_tbt(TbtMatrix<Q>::identity(2, 3), std::span<const Q>(g)).u, g);
  const auto tm = random_q(2, 2, 77);
  const auto g4 = random_vector<Q>(4, 78);
  const auto ref = oracle::gauss_solve(oracle::dense_tbt(oracle::Vec(tm.grid().begin(), tm.grid().end()), 2, 2), g4);
  ASSERT_TRUE(ref.has_value());
  EXPECT_EQ(solve_tbt(tm, std::span<const Q>(g4)).u, *ref);
  EXPECT_EQ(solve_tbt(tm, std::span<const Q>(V({0, 0, 0, 0}))).u, V({0, 0, 0, 0}));
  EXPECT_EQ(dense_solve_tbt(tm, std::span<const Q>(g4)), *ref);
  EXPECT_THROW(solve_tbt(tm, std::span<const Q>(V({1}))), DimensionError);
  EXPECT_THROW(solve_tbt(TbtMatrix<Q>(2, 2, std::vector<Q>(9, Q(0))), std::span<const Q>(g4)), SingularMatrixError);
}

TEST(SolveTbt, FloatResidual) {
  const auto tm = random_tbt<double>(12, 20, 4);
  const auto g = random_vector<double>(240, 5);
  const auto u = solve_tbt(tm, std::span<const double>(g)).u;
  EXPECT_LT(tbt_scaled_residual(tm, std::span<const double>(u), std::span<const double>(g)), 1e-10);
}

TEST(BMatrix, LeadingPattern) {
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 2}, {3, 2}}) {
    const auto s = generators_rho(random_q(m, n, 900 + m + n));
    const auto b = extract_B_xy(s);
    EXPECT_EQ(b[0][0].coeff(m, 0), Q(1));
    EXPECT_TRUE((b[0][0] - mono(1, m, 0)).fits_box(m, n));
    EXPECT_TRUE(b[2][0].fits_box(m, n));
    EXPECT_TRUE(b[3][0].fits_box(m, n));
  }
}

TEST(IdealCoordinates, CompleteColumnsToSyzygies) {
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 2}, {2, 3}}) {
    const auto tm = random_q(m, n, 300 + m * n);
    const auto sym = tbt_symbols(tm);
    const auto s = generators_rho(tm);
    const auto b = extract_B_xy(s);
    const auto coords = recover_ideal_coordinates(sym, b);
    for (std::size_t c = 0; c < 3; ++c) {
      Vec9<Q> h{b[0][c], b[1][c], coords[c].h3, b[2][c], b[3][c], coords[c].h6, coords[c].h7, coords[c].h8, coords[c].h9};
      EXPECT_TRUE(apply_generators(sym, h).is_zero()) << "column " << c;
      EXPECT_EQ(h, s.rho[c]);
    }
  }
}
