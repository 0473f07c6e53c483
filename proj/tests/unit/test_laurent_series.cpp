#include <gtest/gtest.h>

#include "generators.hpp"
#include "slecft/symbolic/laurent_series.hpp"

using namespace slecft::sym;
using slecft::testgen::Gen;

namespace {

LaurentSeries series(int valuation, std::vector<Rational> c, int order) {
  std::vector<CoeffPoly> coeffs;
  for (auto& x : c) coeffs.emplace_back(x);
  return LaurentSeries(valuation, coeffs, order);
}

// z + c2 z^2 + ... with random rational coefficients
LaurentSeries random_univalent(Gen& g, int order) {
  std::vector<Rational> c{Rational(1)};
  for (int k = 2; k < order; ++k) c.push_back(g.rational(4));
  return series(1, c, order);
}

LaurentSeries z_(int order = LaurentSeries::kExact) { return LaurentSeries::monomial(CoeffPoly(1), 1, order); }

}  // namespace

TEST(LaurentSeries, GeometricInverse) {
  LaurentSeries one_plus_z = series(0, {1, 1}, LaurentSeries::kExact);
  LaurentSeries inv = one_plus_z.truncated(10).inverse();
  EXPECT_EQ(inv.order(), 10);
  for (int k = 0; k < 10; ++k) EXPECT_EQ(inv[k], CoeffPoly(k % 2 ? -1 : 1)) << k;
  EXPECT_THROW(inv[10], OrderExhausted);
}

TEST(LaurentSeries, NegativeValuation) {
  LaurentSeries f = series(-1, {1, 0, 3}, 6);  // z^-1 + 3 z
  EXPECT_EQ(f.valuation(), -1);
  EXPECT_EQ(f.residue(), CoeffPoly(1));
  EXPECT_EQ(f.derivative()[-2], CoeffPoly(-1));
  EXPECT_EQ(f.derivative()[0], CoeffPoly(3));
  LaurentSeries sq = f * f;  // z^-2 + 6 + 9 z^2
  EXPECT_EQ(sq[-2], CoeffPoly(1));
  EXPECT_EQ(sq[0], CoeffPoly(6));
  EXPECT_EQ(sq.order(), 5);  // z^-1 * O(z^6)
}

TEST(LaurentSeries, PowersCancel) {
  LaurentSeries f = series(0, {2, 1, 5}, 8);
  EXPECT_TRUE((f.pow(3) * f.pow(-3)).agrees_with(series(0, {1}, LaurentSeries::kExact)));
  EXPECT_TRUE(f.pow(0).agrees_with(series(0, {1}, LaurentSeries::kExact)));
}

TEST(LaurentSeries, MobiusHasZeroSchwarzian) {
  // z / (1 - z)
  LaurentSeries f = z_(12) / series(0, {1, -1}, 12);
  LaurentSeries s = f.schwarzian();
  for (int k = s.valuation(); k < s.order(); ++k) EXPECT_TRUE(s[k].is_zero()) << k;
}

TEST(LaurentSeries, ReversionOfKnownSeries) {
  // f = z + z^2 has inverse z - z^2 + 2 z^3 - 5 z^4 + 14 z^5 (Catalan numbers)
  LaurentSeries f = series(1, {1, 1}, 7);
  LaurentSeries g = f.reversion();
  std::vector<int> expect{1, -1, 2, -5, 14};
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(g[k], CoeffPoly(expect[k - 1])) << k;
}

TEST(LaurentSeries, SymbolicCoefficients) {
  // f = z + a1 z^2; f'' / f' = 2 a1 - 4 a1^2 z + ...
  std::vector<CoeffPoly> c{CoeffPoly(1), CoeffPoly::gen(Generator::a(1))};
  LaurentSeries f(1, c, 6);
  LaurentSeries pre = f.pre_schwarzian();
  EXPECT_EQ(pre[0], CoeffPoly::gen(Generator::a(1)) * Rational(2));
  EXPECT_EQ(pre[1], CoeffPoly::gen(Generator::a(1), 2) * Rational(-4));
  EXPECT_EQ(f.mirrored()[2], CoeffPoly::gen(Generator::abar(1)));
}

TEST(LaurentSeriesProperty, ReversionComposesToIdentity) {
  Gen g(31);
  for (int i = 0; i < 40; ++i) {
    int order = g.integer(3, 9);
    LaurentSeries f = random_univalent(g, order);
    LaurentSeries inv = f.reversion();
    EXPECT_TRUE(f.compose(inv).agrees_with(z_())) << f.to_string();
    EXPECT_TRUE(inv.compose(f).agrees_with(z_())) << f.to_string();
  }
}

TEST(LaurentSeriesProperty, SchwarzianChainRule) {
  // S(f o g) = (S f o g) g'^2 + S g
  Gen g(32);
  for (int i = 0; i < 30; ++i) {
    int order = g.integer(4, 8);
    LaurentSeries f = random_univalent(g, order), h = random_univalent(g, order);
    LaurentSeries lhs = f.compose(h).schwarzian();
    LaurentSeries dh = h.derivative();
    LaurentSeries rhs = f.schwarzian().compose(h) * dh * dh + h.schwarzian();
    EXPECT_TRUE(lhs.agrees_with(rhs));
  }
}

TEST(LaurentSeriesProperty, FieldOperations) {
  Gen g(33);
  for (int i = 0; i < 60; ++i) {
    std::vector<Rational> a{g.nonzero_rational()}, b{g.nonzero_rational()};
    for (int k = 0; k < 5; ++k) {
      a.push_back(g.rational());
      b.push_back(g.rational());
    }
    LaurentSeries x = series(g.integer(-2, 2), a, 8), y = series(g.integer(-2, 2), b, 9);
    EXPECT_TRUE(((x * y) / y).agrees_with(x));
    EXPECT_TRUE((x * y).agrees_with(y * x));
    EXPECT_TRUE((x + y - y).agrees_with(x));
    EXPECT_TRUE((x * y).derivative().agrees_with(x.derivative() * y + x * y.derivative()));
  }
}
