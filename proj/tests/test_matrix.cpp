#include <random>

#include "doctest.h"
#include "seedkit/error.hpp"
#include "seedkit/matrix.hpp"

using namespace seedkit;

namespace {

using Rows = std::vector<std::vector<Entry>>;

// Literal reading of the mutation rule, used as an oracle.
Rows naive_mutation(const Rows& a, std::size_t k) {
  Rows r = a;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t l = 0; l < a[j].size(); ++l) {
      if (j == k || l == k)
        r[j][l] = -a[j][l];
      else
        r[j][l] = a[j][l] + (std::abs(a[j][k]) * a[k][l] + a[j][k] * std::abs(a[k][l])) / 2;
    }
  return r;
}

ExtMatrix random_sss(std::mt19937& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<int> mag(0, 3), sign(0, 1), fr(-3, 3);
  Rows e(n, std::vector<Entry>(n + m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      int a = mag(rng);
      if (a == 0) continue;
      int c = 1 + mag(rng) % 3;
      int s = sign(rng) ? 1 : -1;
      e[i][j] = s * a;
      e[j][i] = -s * c;
    }
    for (std::size_t j = n; j < n + m; ++j) e[i][j] = fr(rng);
  }
  std::vector<VarId> rows, cols;
  for (std::size_t i = 0; i < n; ++i) rows.emplace_back("x" + std::to_string(i + 1));
  cols = rows;
  for (std::size_t j = 0; j < m; ++j) cols.emplace_back("y" + std::to_string(j + 1));
  return ExtMatrix(rows, cols, e);
}

}  // namespace

TEST_CASE("mutation examples") {
  auto a2 = ExtMatrix::square({{0, 1}, {-1, 0}});
  CHECK(mutate_matrix(a2, VarId("x1")).to_rows() == Rows{{0, -1}, {1, 0}});
  auto a3 = ExtMatrix::square({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
  CHECK(mutate_matrix(a3, VarId("x2")).to_rows() == Rows{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
  CHECK_THROWS_AS(mutate_matrix(a2, VarId("x7")), Error);
}

TEST_CASE("mutation agrees with the literal rule and is an involution") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto b = random_sss(rng, 1 + trial % 5, trial % 4);
    for (std::size_t k = 0; k < b.n(); ++k) {
      auto mu = mutate_matrix(b, k);
      CHECK(mu.to_rows() == naive_mutation(b.to_rows(), k));
      CHECK(mutate_matrix(mu, k) == b);
    }
  }
}

TEST_CASE("sign-skew-symmetry") {
  CHECK(is_sign_skew_symmetric(ExtMatrix::square({{0, 2}, {-1, 0}})));
  CHECK_FALSE(is_sign_skew_symmetric(ExtMatrix::square({{0, 1}, {1, 0}})));
  CHECK_FALSE(is_sign_skew_symmetric(ExtMatrix::square({{0, 1}, {0, 0}})));
  CHECK_FALSE(is_sign_skew_symmetric(ExtMatrix::square({{1}})));
}

TEST_CASE("skew-symmetrizer") {
  auto d = skew_symmetrizer(ExtMatrix::square({{0, 2}, {-1, 0}}));
  REQUIRE(d);
  CHECK(*d == std::vector<Entry>{1, 2});
  auto markov = ExtMatrix::square({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}});
  CHECK(*skew_symmetrizer(markov) == std::vector<Entry>{1, 1, 1});
  // disconnected blocks are scaled independently
  auto two = ExtMatrix::square({{0, 3, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, -4, 0}});
  CHECK(*skew_symmetrizer(two) == std::vector<Entry>{1, 3, 2, 1});
  CHECK_FALSE(skew_symmetrizer(ExtMatrix::square({{0, 1, 1}, {-1, 0, 1}, {-2, -1, 0}})));

  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto b = random_sss(rng, 2 + trial % 4, 0);
    auto s = skew_symmetrizer(b);
    if (!s) continue;
    for (std::size_t i = 0; i < b.n(); ++i)
      for (std::size_t j = 0; j < b.n(); ++j) CHECK((*s)[i] * b(i, j) == -(*s)[j] * b(j, i));
  }
}

TEST_CASE("totality") {
  CHECK(check_totally_sss(ExtMatrix::square({{0, 1}, {-1, 0}})).kind == TotalityVerdict::Kind::Total);
  CHECK_THROWS_AS(check_totally_sss(ExtMatrix::square({{0, 1}, {1, 0}})), Error);
  // acyclic but not symmetrizable
  auto acyc = ExtMatrix::square({{0, 1, 1}, {-1, 0, 1}, {-2, -1, 0}});
  auto v = check_totally_sss(acyc, 4);
  CHECK(v.kind == TotalityVerdict::Kind::VerifiedToDepth);
  CHECK(v.depth == 4);
  // oriented 3-cycle with incompatible weights loses sign-skew-symmetry
  auto cyc = ExtMatrix::square({{0, 1, -1}, {-1, 0, 1}, {2, -1, 0}});
  auto c = check_totally_sss(cyc, 5);
  REQUIRE(c.kind == TotalityVerdict::Kind::Counterexample);
  ExtMatrix cur = cyc;
  for (const auto& k : c.seq) cur = mutate_matrix(cur, k);
  CHECK_FALSE(is_sign_skew_symmetric(cur));
}

TEST_CASE("unitization, blocks and acyclicity") {
  auto a2 = ExtMatrix::square({{0, 1}, {-1, 0}});
  CHECK(diagonal_unitization(a2).to_rows() == Rows{{1, 1}, {-1, 1}});

  // x1 -> [x2] -> x3 with x2 frozen
  ExtMatrix q({"x1", "x3"}, {"x1", "x3", "x2"}, {{0, 0, 1}, {0, 0, -1}});
  auto blocks = principal_blocks(q);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].exchangeable == std::vector<VarId>{"x1"});
  CHECK(blocks[0].frozen == std::vector<VarId>{"x2"});
  CHECK(blocks[1].exchangeable == std::vector<VarId>{"x3"});

  CHECK(is_acyclic(ExtMatrix::square({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}})));
  CHECK_FALSE(is_acyclic(ExtMatrix::square({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}})));
}

TEST_CASE("label validation") {
  CHECK_THROWS_AS(ExtMatrix({"x1"}, {"x2"}, {{0}}), Error);
  CHECK_THROWS_AS(ExtMatrix({"x1"}, {"x1", "x1"}, {{0, 0}}), Error);
  CHECK_THROWS_AS(ExtMatrix({"x1"}, {"x1", "y"}, {{0}}), Error);
}
