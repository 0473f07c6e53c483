#include <gtest/gtest.h>

#include <stdexcept>

#include "generators.hpp"
#include "slecft/symbolic/coeff_poly.hpp"
#include "slecft/symbolic/rational.hpp"

using namespace slecft::sym;

TEST(Rational, ParseForms) {
  EXPECT_EQ(parse_rational("3"), make_rational(3));
  EXPECT_EQ(parse_rational("-1/2"), make_rational(-1, 2));
  EXPECT_EQ(parse_rational("4/6"), make_rational(2, 3));
  EXPECT_EQ(parse_rational(" +5 "), make_rational(5));
}

TEST(Rational, ParseRejectsJunk) {
  for (const char* bad : {"", "x", "1/0", "1/", "/2", "1.5", "1/2/3", "3/-4"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Rational, Printing) {
  EXPECT_EQ(to_canonical(make_rational(3)), "3/1");
  EXPECT_EQ(to_canonical(make_rational(2, -4)), "-1/2");
  EXPECT_EQ(to_short(make_rational(6, 3)), "2");
  EXPECT_EQ(to_short(make_rational(-5, 10)), "-1/2");
}

TEST(Rational, RoundTripProperty) {
  slecft::testgen::Gen g(11);
  for (int i = 0; i < 500; ++i) {
    Rational r = g.rational(1000);
    EXPECT_EQ(parse_rational(to_canonical(r)), r);
    EXPECT_EQ(parse_rational(to_short(r)), r);
    EXPECT_GT(r.get_den(), 0);
    EXPECT_EQ(gcd(r.get_num(), r.get_den()), 1);
  }
}

TEST(CentralCharge, KnownValues) {
  EXPECT_EQ(central_charge(make_rational(6)), make_rational(0));
  EXPECT_EQ(central_charge(make_rational(8, 3)), make_rational(0));
  EXPECT_EQ(central_charge(make_rational(3)), make_rational(1, 2));
  EXPECT_EQ(central_charge(make_rational(4)), make_rational(1));
  EXPECT_EQ(central_charge(make_rational(2)), make_rational(-2));
  EXPECT_THROW(central_charge(make_rational(0)), std::domain_error);
  EXPECT_THROW(central_charge(make_rational(-1)), std::domain_error);
}

TEST(CentralCharge, DualityProperty) {
  // c(kappa) = c(16/kappa)
  slecft::testgen::Gen g(12);
  for (int i = 0; i < 200; ++i) {
    Rational k = make_rational(g.integer(1, 60), g.integer(1, 9));
    EXPECT_EQ(central_charge(k), central_charge(Rational(16) / k));
  }
}
