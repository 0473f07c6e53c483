#include <gtest/gtest.h>

#include <numeric>

#include "generators.hpp"
#include "slecft/symbolic/linalg.hpp"
#include "slecft/symbolic/partition.hpp"

using namespace slecft::sym;
using slecft::testgen::Gen;

TEST(Partition, CountsMatchPartitionNumbers) {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int N = 0; N <= 12; ++N) EXPECT_EQ(partitions_of(N).size(), static_cast<std::size_t>(p[N])) << N;
}

TEST(Partition, OrderAndLabels) {
  auto two = partitions_of(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].to_string(), "[2]");
  EXPECT_EQ(two[1].to_string(), "[0,1]");
  auto three = partitions_of(3);
  EXPECT_EQ(three[0].parts(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(three[1].parts(), (std::vector<int>{2, 1}));
  EXPECT_EQ(three[2].parts(), (std::vector<int>{3}));
  EXPECT_EQ(Partition().to_string(), "[]");
  EXPECT_EQ(Partition::from_parts({1, 3, 1}).mult(), (std::vector<std::uint32_t>{2, 0, 1}));
}

TEST(PartitionProperty, WeightsAndDistinctness) {
  for (int N = 1; N <= 10; ++N) {
    auto all = partitions_of(N);
    for (std::size_t i = 0; i < all.size(); ++i) {
      auto parts = all[i].parts();
      EXPECT_EQ(std::accumulate(parts.begin(), parts.end(), 0), N);
      EXPECT_EQ(all[i].weight(), N);
      EXPECT_TRUE(std::is_sorted(parts.rbegin(), parts.rend()));
      EXPECT_EQ(Partition::from_parts(parts), all[i]);
      if (i) EXPECT_GT(all[i - 1].mult(), all[i].mult());
    }
  }
}

TEST(Linalg, SmallDeterminantsAndInverse) {
  RationalMatrix m{{make_rational(2), make_rational(1)}, {make_rational(1), make_rational(3)}};
  EXPECT_EQ(determinant(m), make_rational(5));
  auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(multiply(m, *inv), identity(2));
  RationalMatrix singular{{make_rational(1), make_rational(2)}, {make_rational(2), make_rational(4)}};
  EXPECT_FALSE(inverse(singular));
  EXPECT_EQ(rank(singular), 1u);
  auto ker = kernel(singular, 2);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_EQ(ker[0], (RationalVector{make_rational(1), make_rational(-1, 2)}));
}

TEST(Linalg, SolveReportsNullityAndInconsistency) {
  RationalMatrix a{{make_rational(1), make_rational(1)}, {make_rational(2), make_rational(2)}};
  auto s = solve(a, {make_rational(1), make_rational(2)});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->nullity, 1u);
  EXPECT_FALSE(solve(a, {make_rational(1), make_rational(3)}));
}

TEST(LinalgProperty, KernelVectorsAreAnnihilated) {
  Gen g(41);
  for (int i = 0; i < 80; ++i) {
    std::size_t r = g.integer(1, 5), c = g.integer(1, 6);
    RationalMatrix m = g.matrix(r, c, 2);
    if (g.coin() && r > 1) m[r - 1] = m[0];  // force some degeneracy
    auto ker = kernel(m, c);
    EXPECT_EQ(ker.size() + rank(m), c);
    for (auto& v : ker) {
      for (auto& row : m) {
        Rational dot = 0;
        for (std::size_t k = 0; k < c; ++k) dot += row[k] * v[k];
        EXPECT_EQ(dot, 0);
      }
    }
  }
}

TEST(LinalgProperty, DeterminantMultiplicativeAndInverse) {
  Gen g(42);
  for (int i = 0; i < 80; ++i) {
    std::size_t n = g.integer(1, 5);
    RationalMatrix a = g.matrix(n, n), b = g.matrix(n, n);
    EXPECT_EQ(determinant(multiply(a, b)), determinant(a) * determinant(b));
    auto inv = inverse(a);
    EXPECT_EQ(inv.has_value(), determinant(a) != 0);
    if (inv) EXPECT_EQ(multiply(a, *inv), identity(n));
  }
}

TEST(LinalgProperty, BerkowitzMatchesCofactorExpansion) {
  Gen g(43);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = g.integer(1, 4);
    PolyMatrix m(n, std::vector<CoeffPoly>(n));
    for (auto& row : m)
      for (auto& x : row) x = g.poly(2);
    EXPECT_EQ(determinant(m), determinant_laplace(m));
    std::map<Generator, Rational> at{{Generator::lambda(), g.rational()}, {Generator::cc(), g.rational()}};
    for (std::uint32_t k = 1; k <= 3; ++k) {
      at[Generator::a(k)] = g.rational();
      at[Generator::abar(k)] = g.rational();
    }
    CoeffPoly d = determinant(m).substitute(at);
    ASSERT_TRUE(d.is_constant());
    EXPECT_EQ(d.constant_term(), determinant(specialize(m, at)));
  }
}
