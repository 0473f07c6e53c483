#pragma once

// Small random generators for property tests. Seeds are fixed per test so
// failures reproduce.

#include <ostream>
#include <random>
#include <vector>

#include "slecft/symbolic/coeff_poly.hpp"
#include "slecft/symbolic/linalg.hpp"
#include "slecft/symbolic/rational.hpp"

namespace slecft::sym {
inline void PrintTo(const CoeffPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Rational& r, std::ostream* os) { *os << to_canonical(r); }
}  // namespace slecft::sym

namespace slecft::testgen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  sym::Rational rational(int span = 9) {
    int den = integer(1, span);
    return sym::make_rational(integer(-span, span), den);
  }

  sym::Rational nonzero_rational(int span = 9) {
    for (;;) {
      auto r = rational(span);
      if (r != 0) return r;
    }
  }

  sym::Generator generator(int max_index = 3, bool coordinates_only = false) {
    int pick = integer(0, coordinates_only ? 1 : 3);
    switch (pick) {
      case 0: return sym::Generator::a(integer(1, max_index));
      case 1: return sym::Generator::abar(integer(1, max_index));
      case 2: return sym::Generator::lambda();
      default: return sym::Generator::cc();
    }
  }

  sym::Monomial monomial(int max_vars = 3, int max_index = 3, bool coordinates_only = false) {
    std::vector<std::pair<sym::Generator, std::uint32_t>> powers;
    int n = integer(0, max_vars);
    for (int i = 0; i < n; ++i) powers.emplace_back(generator(max_index, coordinates_only), integer(1, 2));
    return sym::Monomial::from_powers(powers);
  }

  sym::CoeffPoly poly(int max_terms = 4, bool coordinates_only = false) {
    std::vector<sym::Term> terms;
    int n = integer(0, max_terms);
    for (int i = 0; i < n; ++i) terms.push_back({monomial(3, 3, coordinates_only), nonzero_rational()});
    return sym::CoeffPoly::from_terms(terms);
  }

  sym::RationalMatrix matrix(std::size_t rows, std::size_t cols, int span = 5) {
    sym::RationalMatrix m(rows, sym::RationalVector(cols));
    for (auto& row : m)
      for (auto& x : row) x = coin() ? sym::make_rational(integer(-span, span)) : rational(span);
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace slecft::testgen
