#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qrec/errors.hpp"
#include "qrec/fp_matrix.hpp"

using namespace qrec;

namespace {

FpMat random_mat(Prime p, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  FpMat m(p, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<long long>(rng() % p));
  return m;
}

// Every vector of F_p^n, as n x 1 columns.
std::vector<FpMat> all_vectors(Prime p, std::size_t n) {
  std::vector<FpMat> out;
  std::vector<std::uint32_t> d(n, 0);
  for (;;) {
    FpMat v(p, n, 1);
    for (std::size_t k = 0; k < n; ++k) v.set(k, 0, d[k]);
    out.push_back(v);
    std::size_t k = 0;
    while (k < n && ++d[k] == p) d[k++] = 0;
    if (k == n) break;
  }
  return out;
}

std::size_t log_p(std::size_t count, Prime p) {
  std::size_t e = 0;
  while (count > 1) {
    count /= p;
    ++e;
  }
  return e;
}

}  // namespace

TEST(Rref, Identity) {
  const auto r = rref(FpMat::identity(2, 2));
  EXPECT_EQ(r.reduced, FpMat::identity(2, 2));
  EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.rank, 2u);
}

TEST(Rref, AllOnes) {
  const auto r = rref(FpMat::from_rows(2, {{1, 1}, {1, 1}}));
  EXPECT_EQ(r.reduced, FpMat::from_rows(2, {{1, 1}, {0, 0}}));
  EXPECT_EQ(r.rank, 1u);
}

TEST(Rref, EmptyShape) {
  const FpMat m(2, 0, 3);
  const auto r = rref(m);
  EXPECT_EQ(r.reduced, m);
  EXPECT_EQ(r.rank, 0u);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(FpMat::identity(2, 3)).cols(), 0u);
  EXPECT_EQ(kernel_basis(FpMat::from_rows(2, {{1, 1}})), FpMat::from_rows(2, {{1}, {1}}));
  EXPECT_EQ(kernel_basis(FpMat::zero(2, 2, 2)), FpMat::identity(2, 2));
}

TEST(Image, Examples) {
  EXPECT_EQ(image_basis(FpMat::identity(2, 2)), FpMat::identity(2, 2));
  EXPECT_EQ(image_basis(FpMat::from_rows(2, {{1, 0}, {1, 0}})), FpMat::from_rows(2, {{1}, {1}}));
  EXPECT_EQ(image_basis(FpMat::zero(2, 2, 2)).cols(), 0u);
}

TEST(Solve, Examples) {
  const FpMat b = FpMat::from_rows(2, {{1}, {0}});
  EXPECT_EQ(*solve(FpMat::identity(2, 2), b), b);
  EXPECT_EQ(*solve(FpMat::from_rows(2, {{1, 1}}), FpMat::from_rows(2, {{1}})), FpMat::from_rows(2, {{1}, {0}}));
  EXPECT_FALSE(solve(FpMat::zero(2, 2, 2), b).has_value());
}

TEST(Kron, Examples) {
  const FpMat b = FpMat::from_rows(3, {{1, 2}, {0, 1}});
  EXPECT_EQ(kron(FpMat::identity(3, 1), b), b);
  EXPECT_EQ(kron(FpMat::from_rows(2, {{1}, {1}}), FpMat::from_rows(2, {{1, 0}})),
            FpMat::from_rows(2, {{1, 0}, {1, 0}}));
}

TEST(Block, DirectSum) {
  const FpMat a = FpMat::from_rows(2, {{1, 1}});
  const FpMat b = FpMat::from_rows(2, {{1}, {0}});
  const FpMat g = block({{a, FpMat::zero(2, 1, 1)}, {FpMat::zero(2, 2, 2), b}});
  EXPECT_EQ(g, FpMat::from_rows(2, {{1, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
  EXPECT_EQ(block_diagonal(2, {a, b}), g);
}

TEST(FpMat, RejectsBadInput) {
  EXPECT_THROW(FpMat(4, 1, 1), ContractViolation);
  EXPECT_THROW(FpMat::identity(2, 2) + FpMat::identity(3, 2), ContractViolation);
  EXPECT_THROW(FpMat::identity(2, 2) * FpMat::identity(2, 3), ContractViolation);
  EXPECT_THROW(FpMat(2, 1, 2, {0, 2}), ContractViolation);
}

TEST(FpMat, NegativeEntriesReduce) {
  EXPECT_EQ(FpMat::from_rows(5, {{-1, 7}}), FpMat::from_rows(5, {{4, 2}}));
}

TEST(FpMat, Inverse) {
  const FpMat m = FpMat::from_rows(5, {{1, 2}, {3, 4}});
  EXPECT_EQ(m * inverse(m), FpMat::identity(5, 2));
  EXPECT_FALSE(is_invertible(FpMat::from_rows(5, {{1, 2}, {2, 4}})));
  for (FpMat::Entry a = 1; a < 7; ++a) EXPECT_EQ(a * inverse_mod(a, 7) % 7, 1u);
}

// Brute force: the null space over a small field, listed element by element.
class LinalgOracle : public ::testing::TestWithParam<Prime> {};

TEST_P(LinalgOracle, KernelAndRankAgainstEnumeration) {
  const Prime p = GetParam();
  std::mt19937_64 rng(1000 + p);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = rng() % 4, c = rng() % 4 + (p == 2 ? 1 : 0);
    const FpMat m = random_mat(p, r, c, rng);
    std::size_t null_count = 0;
    std::set<std::vector<FpMat::Entry>> column_space;
    for (const auto& v : all_vectors(p, c)) {
      const FpMat mv = m * v;
      if (mv.is_zero()) ++null_count;
      column_space.insert(mv.entries());
    }
    const FpMat k = kernel_basis(m);
    EXPECT_EQ(k.cols(), log_p(null_count, p));
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(rank(k), k.cols());
    EXPECT_EQ(rank(m), log_p(column_space.size(), p));
    EXPECT_EQ(rank(m) + k.cols(), c);
    EXPECT_EQ(image_basis(m).cols(), rank(m));
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST_P(LinalgOracle, SolveAgainstEnumeration) {
  const Prime p = GetParam();
  std::mt19937_64 rng(2000 + p);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = rng() % 3 + 1, c = rng() % 3 + 1;
    const FpMat a = random_mat(p, r, c, rng);
    const FpMat b = random_mat(p, r, 1, rng);
    bool exists = false;
    for (const auto& v : all_vectors(p, c)) exists = exists || (a * v == b);
    const auto x = solve(a, b);
    ASSERT_EQ(x.has_value(), exists);
    if (x) EXPECT_EQ(a * *x, b);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, LinalgOracle, ::testing::Values(2u, 3u, 5u));

TEST(LinalgProperties, RrefIsIdempotentAndRowEquivalent) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const FpMat m = random_mat(7, rng() % 5, rng() % 5, rng);
    const auto r = rref(m);
    EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
    EXPECT_EQ(kernel_basis(r.reduced), kernel_basis(m));
  }
}

TEST(LinalgProperties, ComplementCompletesBasis) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const FpMat m = random_mat(3, rng() % 5 + 1, rng() % 5, rng);
    const FpMat im = image_basis(m);
    const FpMat comp = complement_basis(m);
    const FpMat both = block({{im, comp}});
    EXPECT_EQ(both.cols(), m.rows());
    EXPECT_TRUE(is_invertible(both));
  }
}

TEST(LinalgProperties, KronMixedProduct) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const FpMat a = random_mat(5, 2, 3, rng), c = random_mat(5, 3, 2, rng);
    const FpMat b = random_mat(5, 2, 2, rng), d = random_mat(5, 2, 1, rng);
    EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  }
}
