#pragma once

#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

#include "slecft/symbolic/coeff_poly.hpp"

namespace slecft::sym {

// Raised when a caller asks for a coefficient beyond the reliable order.
class OrderExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Truncated Laurent series sum_{k >= valuation} c_k z^k + O(z^order).
// Coefficients with exponent < order are exact; order == kExact marks a
// finite (exact) Laurent polynomial.
class LaurentSeries {
 public:
  static constexpr int kExact = INT_MAX / 4;

  LaurentSeries() : valuation_(0), order_(kExact) {}
  LaurentSeries(int valuation, std::vector<CoeffPoly> coeffs, int order);
  static LaurentSeries monomial(const CoeffPoly& c, int exponent, int order = kExact);
  static LaurentSeries zero(int order = kExact);

  int valuation() const { return valuation_; }
  int order() const { return order_; }
  bool exact() const { return order_ >= kExact; }
  // Exponents valuation()..valuation()+stored()-1 are stored; the rest below order() are zero.
  int stored() const { return static_cast<int>(coeffs_.size()); }
  bool is_zero() const { return coeffs_.empty(); }

  // Throws OrderExhausted for k >= order().
  CoeffPoly coefficient(int k) const;
  CoeffPoly operator[](int k) const { return coefficient(k); }

  LaurentSeries truncated(int order) const;
  LaurentSeries shifted(int k) const;  // times z^k

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator-() const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries operator*(const CoeffPoly& s) const;
  LaurentSeries operator/(const LaurentSeries& o) const;

  // Requires the leading coefficient to be a nonzero rational constant.
  LaurentSeries inverse() const;
  LaurentSeries pow(long e) const;
  LaurentSeries derivative() const;
  // Mirrors every coefficient (a_m <-> abar_m).
  LaurentSeries mirrored() const;

  // this(inner(z)); this must have valuation >= 0 and inner valuation >= 1.
  LaurentSeries compose(const LaurentSeries& inner) const;
  // Compositional inverse of f = c z + O(z^2), c a nonzero rational.
  LaurentSeries reversion() const;
  // f''/f'
  LaurentSeries pre_schwarzian() const;
  // (f''/f')' - (f''/f')^2 / 2
  LaurentSeries schwarzian() const;
  // Coefficient of z^{-1}.
  CoeffPoly residue() const;

  // Exact comparison on the shared reliable range.
  bool agrees_with(const LaurentSeries& o) const;

  std::string to_string() const;

 private:
  void normalize();
  int valuation_;
  std::vector<CoeffPoly> coeffs_;
  int order_;
};

}  // namespace slecft::sym
