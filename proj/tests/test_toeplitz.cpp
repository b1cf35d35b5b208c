#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace syzolve;
using namespace testutil;

TEST(Symbols, Identity) {
  const auto s = symbols(ToeplitzMatrix<Q>::identity(2));
  EXPECT_EQ(s.wrapped, P({1}));
  EXPECT_EQ(s.laurent.terms().size(), 1u);
  EXPECT_EQ(s.shifted, P({0, 1}));
}

TEST(Symbols, WrappedIndexRule) {
  const auto s = symbols(TQ(2, {1, 2, 3}));
  EXPECT_EQ(s.wrapped, P({2, 3, 0, 1}));
  EXPECT_EQ(s.laurent.coeff(-1), Q(1));
  EXPECT_EQ(s.laurent.coeff(1), Q(3));
  EXPECT_EQ(s.shifted, P({1, 2, 3}));
  EXPECT_EQ(symbols(TQ(1, {5})).wrapped, P({5}));
}

TEST(Toeplitz, Matvec) {
  const auto tm = TQ(2, {1, 2, 3});
  EXPECT_EQ(matvec(tm, std::span<const Q>(V({1, 0}))), V({2, 3}));
  EXPECT_EQ(matvec(tm, std::span<const Q>(V({1, 1}))), V({3, 5}));
  EXPECT_EQ(matvec(ToeplitzMatrix<Q>::identity(2), std::span<const Q>(V({4, -7}))), V({4, -7}));
  EXPECT_THROW(matvec(tm, std::span<const Q>(V({1}))), DimensionError);
}

TEST(Toeplitz, MatvecMatchesDense) {
  for (std::size_t n : {1, 3, 8, 17}) {
    const auto tm = random_toeplitz<Q>(n, n);
    const auto u = random_vector<Q>(n, 99);
    const auto d = oracle::dense_toeplitz(oracle::Vec(tm.diagonals().begin(), tm.diagonals().end()), n);
    EXPECT_EQ(matvec(tm, std::span<const Q>(u)), oracle::matvec(d, u));
  }
}

TEST(Toeplitz, DenseSolve) {
  EXPECT_EQ(dense_solve(TQ(2, {1, 2, 3}), std::span<const Q>(V({1, 0}))), V({2, -3}));
  EXPECT_EQ(dense_solve(ToeplitzMatrix<Q>::identity(3), std::span<const Q>(V({1, 2, 3}))), V({1, 2, 3}));
  EXPECT_THROW(dense_solve(TQ(1, {0}), std::span<const Q>(V({1}))), SingularMatrixError);
  EXPECT_THROW(ToeplitzMatrix<Q>(2, V({1, 2})), DimensionError);
}

TEST(AssembleS, IdentityN1) {
  const auto s = assemble_S(ToeplitzMatrix<Q>::identity(1));
  const long long want[3][3] = {{1, 0, -1}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(s(i, j), Q(want[i][j]));
}

TEST(AssembleS, FirstColumnIsWrappedSymbol) {
  const auto s = assemble_S(TQ(2, {1, 2, 3}));
  const auto want = V({2, 3, 0, 1, 0, 0});
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(s(i, 0), want[i]);
}

TEST(AssembleS, FoldedBlockIsT) {
  for (std::size_t n : {1, 2, 5, 9}) {
    const auto tm = random_toeplitz<Q>(n, 300 + n);
    const auto s = assemble_S(tm);
    const auto d = tm.dense();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(s(i, j) + s(i + 2 * n, j), d(i, j));
    const auto fb = folded_block(symbols(tm));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(fb(i, j), d(i, j));
  }
}

TEST(AssembleS, StructuredSolveMatchesDense) {
  for (std::size_t n : {1, 2, 4, 7}) {
    const auto tm = random_toeplitz<Q>(n, 500 + n);
    const auto sym = symbols(tm);
    const auto rhs = random_vector<Q>(3 * n, 600 + n);
    const auto pre = solve_S(sym, {QPoly(rhs)});
    std::vector<Q> x = pre[0].p.to_vector(n);
    const auto qv = pre[0].q.to_vector(n), rv = pre[0].r.to_vector(n);
    x.insert(x.end(), qv.begin(), qv.end());
    x.insert(x.end(), rv.begin(), rv.end());
    const auto s = assemble_S(tm);
    oracle::Mat sm(3 * n, oracle::Vec(3 * n));
    for (std::size_t i = 0; i < 3 * n; ++i)
      for (std::size_t j = 0; j < 3 * n; ++j) sm[i][j] = s(i, j);
    EXPECT_EQ(oracle::matvec(sm, x), rhs);
  }
}

TEST(Toeplitz, NormInf) {
  EXPECT_DOUBLE_EQ(TQ(2, {1, 2, -3}).norm_inf(), 5.0);
  EXPECT_DOUBLE_EQ(ToeplitzMatrix<double>(3, {1, 1, 1, 1, 1}).norm_inf(), 3.0);
}
