#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "slecft/geom/diff_operator.hpp"
#include "slecft/symbolic/partition.hpp"

namespace slecft::geom {

// Relative series order used by the residue construction of mode n.
int default_series_order(int n, int max_index);

// L_n from coefficient extraction in phi = v_n(f) / f', f(z) = z(1 + sum a_j z^j):
//   e       = -[z^1] phi / 2
//   x_{a_m} = [z^{m+1}] f' phi_{>=2} + (m/2) [z^1]phi a_m
//   x_{ab_m}= [z^{m+1}] fbar'(z) sum_{j>=0} phi_{-j} z^{j+2} + (m/2) [z^1]phi abar_m
//   scalar  = -(c/12) vartheta(n)
// Valid for every mode; extra_order raises the internal series order.
DiffOperator build_L(int n, int max_index, int extra_order = 0);
DiffOperator build_Lbar(int n, int max_index, int extra_order = 0);

// Closed forms for n >= -1 (n >= 1: -[z^{m+1}] f^{n+1}; n = 0: grading;
// n = -1: the first-order operator with a_0 = 1).
DiffOperator build_explicit(int n, int max_index);

// n <= -3 through (l - 1) L_{-l-1} = [L_{-1}, L_{-l}], starting from the
// explicit L_{-1} and residue-built L_{-2}.
DiffOperator build_by_recursion(int n, int max_index);

// -1/2 res[(G'/G)^2 z^{n+1}] and -res[SG z^{n+1}], G the inverse of f.
CoeffPoly varpi(int n);
CoeffPoly vartheta(int n);

// Monomials a^k abar^kbar with |k| = left and |kbar| = right.
std::vector<sym::Monomial> monomials_of_bidegree(int left, int right);
sym::Monomial coordinate_monomial(const sym::Partition& k, const sym::Partition& kbar);

struct SolverResult {
  DiffOperator op;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t nullity = 0;
  bool consistent = false;
};

// Determines L_{-2} up to index max_index from [L_1, X] = 3 L_{-1},
// [L_2, X] = 4 L_0 + c/2, the value X 1 and, optionally,
// [Lbar_1, X] = [Lbar_2, X] = [Lbar_{-1}, X] = 0. Unknowns follow the degree ansatz of the
// coefficients (homogeneous left degree m + 2 for d/da_m; left - right degree
// 2 - m and weighted degree <= m + 2 for d/dabar_m).
SolverResult solve_L_minus_two(int max_index, bool bar_constraints = true);

}  // namespace slecft::geom
