#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "slecft/symbolic/generator.hpp"
#include "slecft/symbolic/rational.hpp"

namespace slecft::sym {

struct VarPower {
  std::uint32_t key;
  std::uint32_t exp;
  bool operator==(const VarPower&) const = default;
};

// Sparse exponent vector, variables sorted by key.
class Monomial {
 public:
  using Storage = boost::container::small_vector<VarPower, 4>;

  Monomial() = default;
  explicit Monomial(Generator g, std::uint32_t exp = 1);
  static Monomial from_powers(std::vector<std::pair<Generator, std::uint32_t>> powers);

  const Storage& powers() const { return vars_; }
  bool is_one() const { return vars_.empty(); }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(Generator g) const;
  // sum of m * exp over a_m (left) and abar_m (right)
  long left_degree() const;
  long right_degree() const;
  std::uint32_t max_coordinate_index() const;
  bool has_non_coordinate() const;

  Monomial operator*(const Monomial& o) const;
  // Returns (exponent, monomial / g); exponent 0 means the derivative vanishes.
  std::pair<std::uint32_t, Monomial> divide_by(Generator g) const;
  Monomial without(Generator g) const;
  Monomial mirrored() const;

  std::size_t hash() const;
  bool operator==(const Monomial& o) const { return vars_ == o.vars_; }

  std::string to_string() const;  // "a1^2*abar3*lambda", "1" for the unit

 private:
  void recompute_degree();
  Storage vars_;
  std::uint32_t degree_ = 0;
};

// Canonical order: higher total degree first, then lexicographic in the
// variable order A-block, ABAR-block, lambda, c (larger exponent of an earlier
// variable comes first).
bool canonical_before(const Monomial& x, const Monomial& y);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  Rational coef;
};

class CoeffPoly {
 public:
  CoeffPoly() = default;
  CoeffPoly(const Rational& constant);  // NOLINT: implicit scalar embedding
  CoeffPoly(long constant) : CoeffPoly(Rational(constant)) {}  // NOLINT
  static CoeffPoly gen(Generator g, std::uint32_t exp = 1);
  static CoeffPoly monomial(const Monomial& m, const Rational& coef = 1);
  static CoeffPoly from_terms(std::vector<Term> terms);  // merges duplicates, drops zeros

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (0 if absent). constant_value() throws unless is_constant().
  Rational constant_term() const;
  Rational constant_value() const;
  Rational coefficient(const Monomial& m) const;

  CoeffPoly operator+(const CoeffPoly& o) const;
  CoeffPoly operator-(const CoeffPoly& o) const;
  CoeffPoly operator-() const;
  CoeffPoly operator*(const CoeffPoly& o) const;
  CoeffPoly operator*(const Rational& s) const;
  CoeffPoly& operator+=(const CoeffPoly& o);
  CoeffPoly& operator-=(const CoeffPoly& o);
  CoeffPoly& operator*=(const CoeffPoly& o);
  CoeffPoly pow(unsigned e) const;
  bool operator==(const CoeffPoly& o) const;

  CoeffPoly derivative(Generator g) const;
  CoeffPoly substitute(const std::map<Generator, Rational>& assignment) const;
  CoeffPoly substitute_poly(Generator g, const CoeffPoly& value) const;
  // Coefficient of g^e viewed as a polynomial in g.
  CoeffPoly coefficient_of(Generator g, std::uint32_t e) const;
  std::uint32_t degree_in(Generator g) const;
  CoeffPoly mirrored() const;

  std::uint32_t total_degree() const;
  // Largest a_m / abar_m index present (0 when none).
  std::uint32_t max_coordinate_index() const;
  bool depends_on_non_coordinates() const;
  // Generators appearing in the polynomial, in key order.
  std::vector<Generator> variables() const;

  std::string to_string() const;
  static CoeffPoly parse(std::string_view text);

 private:
  friend class PolyAccumulator;
  std::vector<Term> terms_;  // canonical order, no zero coefficients
};

CoeffPoly operator*(const Rational& s, const CoeffPoly& p);

struct Bidegree {
  long left;
  long right;
  bool operator==(const Bidegree&) const = default;
};

// Maximum left / right degree over monomials. With strict = true a polynomial
// containing lambda or c is rejected with std::invalid_argument; otherwise those
// variables are ignored.
Bidegree bidegree(const CoeffPoly& p, bool strict = true);

// Accumulates sums of products without re-sorting after every addition.
class PolyAccumulator {
 public:
  void add(const Monomial& m, const Rational& c);
  void add(const CoeffPoly& p);
  void add_scaled(const CoeffPoly& p, const Rational& s);
  void add_product(const CoeffPoly& p, const CoeffPoly& q, const Rational& s = 1);
  // Adds s * p * m for a single monomial m.
  void add_times_monomial(const CoeffPoly& p, const Monomial& m, const Rational& s);
  CoeffPoly finish();

 private:
  std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

// 13 - 24/kappa - 3 kappa/2, exactly. Throws for kappa <= 0.
Rational central_charge(const Rational& kappa);

}  // namespace slecft::sym
