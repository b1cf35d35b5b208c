#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace syzolve;
using namespace testutil;

TEST(Instance, ToeplitzRoundTrip) {
  const auto tm = random_toeplitz<Q>(4, 1);
  const auto j = to_json(tm);
  EXPECT_EQ(j["kind"], "toeplitz");
  EXPECT_EQ(j["diagonals"].size(), 7u);
  const auto back = std::get<ToeplitzMatrix<Q>>(instance_from_json(j));
  EXPECT_EQ(back, tm);
  EXPECT_EQ(linalg::rank(back.dense()), 4u);
}

TEST(Instance, FloatRoundTripIsExact) {
  const auto tm = random_toeplitz<double>(9, 3);
  EXPECT_EQ(std::get<ToeplitzMatrix<double>>(instance_from_json(to_json(tm))), tm);
}

TEST(Instance, TbtGrid) {
  const auto tm = random_tbt<Q>(2, 2, 7);
  const auto j = to_json(tm);
  ASSERT_EQ(j["diagonals"].size(), 3u);
  for (const auto& row : j["diagonals"]) EXPECT_EQ(row.size(), 3u);
  EXPECT_EQ(std::get<TbtMatrix<Q>>(instance_from_json(j)), tm);
  auto flat = j;
  flat["diagonals"] = json::array();
  for (const auto& row : j["diagonals"])
    for (const auto& e : row) flat["diagonals"].push_back(e);
  EXPECT_EQ(std::get<TbtMatrix<Q>>(instance_from_json(flat)), tm);
}

TEST(Instance, Determinism) {
  EXPECT_EQ(to_json(random_toeplitz<Q>(6, 42)).dump(), to_json(random_toeplitz<Q>(6, 42)).dump());
  EXPECT_EQ(to_json(random_tbt<double>(3, 4, 42)).dump(), to_json(random_tbt<double>(3, 4, 42)).dump());
  EXPECT_NE(to_json(random_toeplitz<Q>(6, 42)).dump(), to_json(random_toeplitz<Q>(6, 43)).dump());
}

TEST(Instance, ParseErrors) {
  EXPECT_THROW(instance_from_json(json::parse(R"({"kind": "toeplitz", "n": 2, "diagonals": ["1", "2"]})")), ParseError);
  EXPECT_THROW(instance_from_json(json::parse(R"({"kind": "circulant", "n": 2, "diagonals": []})")), ParseError);
  EXPECT_THROW(instance_from_json(json::parse(R"({"kind": "toeplitz", "n": 0, "diagonals": []})")), ParseError);
  EXPECT_THROW(instance_from_json(json::parse(R"({"kind": "toeplitz", "n": 1, "diagonals": ["x"]})")), ParseError);
  EXPECT_THROW(instance_from_json(json::parse(R"({"kind": "toeplitz", "n": 1, "diagonals": ["1"], "field": "gf2"})")), ParseError);
  EXPECT_THROW(instance_from_json(json::parse(R"([1, 2])")), ParseError);
  const auto ok = instance_from_json(json::parse(R"({"kind": "toeplitz", "n": 2, "diagonals": [1, "1/2", 3]})"));
  EXPECT_EQ(std::get<ToeplitzMatrix<Q>>(ok).t(0), Q(mpz_class(1), mpz_class(2)));
}

TEST(Instance, FloatGeneratorIsDiagonallyDominant) {
  for (std::size_t n : {1, 5, 64}) {
    const auto tm = random_toeplitz<double>(n, n);
    double off = 0.0;
    for (std::ptrdiff_t k = 1; k < static_cast<std::ptrdiff_t>(n); ++k) off += std::fabs(tm.t(k)) + std::fabs(tm.t(-k));
    EXPECT_GT(tm.t(0), off);
  }
}
