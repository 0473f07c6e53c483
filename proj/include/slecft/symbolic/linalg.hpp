#pragma once

#include <optional>
#include <vector>

#include "slecft/symbolic/coeff_poly.hpp"
#include "slecft/symbolic/rational.hpp"

namespace slecft::sym {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using PolyMatrix = std::vector<std::vector<CoeffPoly>>;

struct Echelon {
  RationalMatrix rref;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
// Basis of {x : m x = 0}; each vector has its first nonzero entry equal to 1.
std::vector<RationalVector> kernel(const RationalMatrix& m, std::size_t columns);
Rational determinant(RationalMatrix m);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix identity(std::size_t n);

struct LinearSolution {
  RationalVector x;          // one solution (free variables set to zero)
  std::size_t nullity = 0;   // dimension of the solution space
};
// Solves a x = b; nullopt when inconsistent.
std::optional<LinearSolution> solve(const RationalMatrix& a, const RationalVector& b);

// Division-free determinant (Berkowitz) over the polynomial ring.
CoeffPoly determinant(const PolyMatrix& m);
// Cofactor expansion; exponential cost, meant for small matrices and tests.
CoeffPoly determinant_laplace(const PolyMatrix& m);

RationalMatrix specialize(const PolyMatrix& m, const std::map<Generator, Rational>& assignment);

}  // namespace slecft::sym
