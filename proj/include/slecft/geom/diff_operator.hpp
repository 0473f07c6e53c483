#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "slecft/symbolic/coeff_poly.hpp"

namespace slecft::geom {

using sym::CoeffPoly;
using sym::Generator;
using sym::Rational;

enum class Family : std::uint8_t { L = 0, Lbar = 1 };

enum class BuildRoute : std::uint8_t { Residue = 0, Recursion = 1, Explicit = 2, Solver = 3, Derived = 4 };

std::string to_string(Family f);
std::string to_string(BuildRoute r);

struct Provenance {
  BuildRoute route = BuildRoute::Derived;
  int series_order = 0;  // relative order of the series used (0 when none)
};

// Polynomial state in the a_m, abar_m together with its lambda-level. The
// level is the eigenvalue offset of L_0 + Lbar_0 (i.e. N + Ntilde for the
// states Psi); it is carried explicitly because mixed states need not be
// homogeneous in the monomial grading.
struct StatePoly {
  int level = 0;
  CoeffPoly poly;

  static StatePoly one() { return {0, CoeffPoly(1L)}; }
  // Monomial state tagged with its weighted degree.
  static StatePoly monomial(const sym::Monomial& m);
  bool operator==(const StatePoly& o) const { return level == o.level && poly == o.poly; }
};

// e * E + scalar + sum_i x_i d/dx_i, acting on a state S of level L as
// e (2 lambda + L) S + scalar S + sum_i x_i dS/dx_i and lowering the level by
// mode. The coefficients are polynomials in a, abar and c, never lambda.
// Derivation coefficients are known for coordinate indices <= max_index.
class DiffOperator {
 public:
  int mode = 0;
  Family family = Family::L;
  int max_index = 0;
  CoeffPoly e;
  CoeffPoly scalar;
  std::map<std::uint32_t, CoeffPoly> derivations;  // keyed by Generator::key()
  Provenance provenance;

  CoeffPoly derivation(Generator g) const;
  void set_derivation(Generator g, CoeffPoly c);

  // sum_i x_i dp/dx_i; throws std::out_of_range if p uses an index > max_index.
  CoeffPoly vector_apply(const CoeffPoly& p) const;

  // The same operator with derivations cut to indices <= m (m <= max_index).
  DiffOperator restricted(int m) const;

  bool operator==(const DiffOperator& o) const;
  std::string describe() const;
};

StatePoly apply(const DiffOperator& op, const StatePoly& s);

// [X, Y] as an operator of mode X.mode + Y.mode, valid up to the index range
// both inputs support.
DiffOperator commutator(const DiffOperator& x, const DiffOperator& y);

// x + y (same mode); the result covers min of the index ranges.
DiffOperator operator+(const DiffOperator& x, const DiffOperator& y);
DiffOperator operator-(const DiffOperator& x, const DiffOperator& y);
DiffOperator operator*(const Rational& s, const DiffOperator& x);
DiffOperator plus_scalar(DiffOperator x, const CoeffPoly& s);

// a_m <-> abar_m everywhere, family flipped.
DiffOperator mirrored(const DiffOperator& x);

// First coefficient slot where x and y differ on indices <= m, or empty.
std::string first_difference(const DiffOperator& x, const DiffOperator& y, int m);

}  // namespace slecft::geom
