#include <gtest/gtest.h>

#include <random>

#include "polyak/linalg.hpp"

using namespace polyak;

namespace {

using Dense = std::vector<std::vector<Rational>>;

// Plain dense Gaussian elimination, the rank oracle.
int dense_rank(Dense a) {
  int rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < a.size(); ++c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[static_cast<std::size_t>(rank)]);
    auto& piv = a[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
      Rational f = a[r][c] / piv[c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * piv[k];
    }
    ++rank;
  }
  return rank;
}

SparseVec sparse(const std::vector<Rational>& d) {
  SparseVec v;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) v.emplace_back(static_cast<int>(i), d[i]);
  return v;
}

// mpq_class(p, q) does not reduce
Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Dense random_system(std::mt19937_64& rng, int rows, int cols, int density_pct) {
  Dense a(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
  for (auto& row : a)
    for (auto& x : row)
      if (static_cast<int>(rng() % 100) < density_pct)
        x = frac(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
  return a;
}

}  // namespace

TEST(RowSpace, Trivial) {
  SparseVec v{{0, 1}, {3, Rational(1, 2)}};
  EXPECT_EQ(row_space({v, scaled(v, 2)}, 4).rank(), 1);
  EXPECT_EQ(row_space({}, 4).rank(), 0);
}

TEST(RowSpace, MatchesDenseOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Dense a = random_system(rng, 50, 80, 4 + trial % 10);
    // duplicate some rows as combinations to force rank deficiency
    for (int k = 0; k < 10; ++k) {
      auto& r = a[rng() % a.size()];
      const auto& s = a[rng() % a.size()];
      const auto& t = a[rng() % a.size()];
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = 2 * s[i] - t[i];
    }
    std::vector<SparseVec> rows;
    for (const auto& r : a) rows.push_back(sparse(r));
    RowSpace rs = row_space(rows, 80);
    EXPECT_EQ(rs.rank(), dense_rank(a));
    for (std::size_t i = 0; i < rs.basis.size(); ++i) {
      EXPECT_EQ(rs.basis[i].front().first, rs.pivots[i]);
      EXPECT_EQ(rs.basis[i].front().second, 1);
    }
  }
}

TEST(RowSpace, IndependentOfRowOrder) {
  std::mt19937_64 rng(5);
  Dense a = random_system(rng, 30, 40, 10);
  std::vector<SparseVec> rows;
  for (const auto& r : a) rows.push_back(sparse(r));
  auto first = row_space(rows, 40).basis;
  std::shuffle(rows.begin(), rows.end(), rng);
  EXPECT_EQ(row_space(rows, 40).basis, first);
}

TEST(Complement, Trivial) {
  EXPECT_EQ(orthogonal_complement({}, 5).size(), 5u);
  std::vector<SparseVec> full;
  for (int i = 0; i < 5; ++i) full.push_back({{i, 1}});
  EXPECT_TRUE(orthogonal_complement(full, 5).empty());
}

TEST(Complement, OrthogonalWithComplementaryDimension) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Dense a = random_system(rng, 25, 40, 8);
    std::vector<SparseVec> rows;
    for (const auto& r : a) rows.push_back(sparse(r));
    auto w = orthogonal_complement(rows, 40);
    EXPECT_EQ(static_cast<int>(w.size()), 40 - dense_rank(a));
    for (const auto& x : w)
      for (const auto& r : rows) EXPECT_EQ(dot(x, r), 0);
    Dense wd;
    for (const auto& x : w) {
      std::vector<Rational> d(40);
      for (const auto& [i, c] : x) d[static_cast<std::size_t>(i)] = c;
      wd.push_back(d);
    }
    EXPECT_EQ(dense_rank(wd), static_cast<int>(w.size()));
  }
}

TEST(SpanSolver, Coefficients) {
  SparseVec r1{{0, 1}, {1, 2}}, r2{{1, 1}, {2, -1}}, r3{{3, 5}};
  auto c = in_span(axpy(r1, 1, r2), {r1, r2, r3});
  ASSERT_TRUE(c);
  SparseVec back;
  std::vector<SparseVec> rows{r1, r2, r3};
  for (const auto& [i, x] : *c) back = axpy(back, -x, rows[static_cast<std::size_t>(i)]);
  EXPECT_EQ(back, axpy(r1, 1, r2));
  EXPECT_FALSE(in_span(SparseVec{{2, 1}}, {r1, r2, r3}));
}

TEST(SpanSolver, RandomMembers) {
  std::mt19937_64 rng(21);
  Dense a = random_system(rng, 20, 30, 15);
  std::vector<SparseVec> rows;
  for (const auto& r : a) rows.push_back(sparse(r));
  SpanSolver solver(rows);
  for (int t = 0; t < 20; ++t) {
    SparseVec v;
    for (int k = 0; k < 4; ++k) v = axpy(v, frac(static_cast<long>(rng() % 7) - 3, 2), rows[rng() % rows.size()]);
    auto c = solver.solve(v);
    ASSERT_TRUE(c);
  }
}

TEST(Ambient, RejectsForeignKeys) {
  auto keys = enumerate_diagrams(Skeleton::Circle, Flavor::ChordSigned, 1, CountMode::UpTo);
  Ambient amb(keys);
  EXPECT_EQ(amb.size(), static_cast<int>(keys.size()));
  FormalSum s = FormalSum::of(keys.back(), 3);
  EXPECT_EQ(amb.sum(amb.vec(s), Flavor::ChordSigned, Skeleton::Circle), s);
  auto two = enumerate_diagrams(Skeleton::Circle, Flavor::ChordSigned, 2, CountMode::Exactly);
  EXPECT_ANY_THROW(amb.vec(FormalSum::of(two.front())));
}
