#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "slecft/geom/diff_operator.hpp"
#include "slecft/geom/operator_table.hpp"
#include "slecft/symbolic/partition.hpp"

namespace slecft::geom {

struct CheckResult {
  bool ok = true;
  std::size_t cases = 0;
  std::string witness;  // first failure, or a short summary on success

  void fail(std::string w) {
    if (ok) witness = std::move(w);
    ok = false;
  }
};

// L_{-k} Lbar_{-kbar} 1 with L_{-k} = ... L_{-2}^{k2} L_{-1}^{k1}.
StatePoly psi(OperatorTable& table, const sym::Partition& k, const sym::Partition& kbar);

// Applies L_{k'} = L_1^{k'1} L_2^{k'2} ... (highest modes first).
StatePoly apply_raising(OperatorTable& table, Family f, const sym::Partition& kprime, StatePoly s);

// Rank over Q of {psi(k, 0) : |k| = N} at the given lambda and c.
std::size_t level_rank(OperatorTable& table, const Rational& weight, const Rational& cc, int N);

// L_k (a^k); expected prod_m (-1)^{k_m} k_m!.
CoeffPoly duality_pairing(OperatorTable& table, const sym::Partition& k);
CheckResult duality_check(OperatorTable& table, int max_level);

// L_{k'} L_{-k} 1 against the Verma Gram matrix, symbolically.
CheckResult gram_consistency(OperatorTable& table, int N);

// Monomials a^k abar^kbar with |k| + |kbar| <= max_weighted_degree.
std::vector<sym::Monomial> test_monomials(int max_weighted_degree);

// [L_n, L_m] = (n - m) L_{n+m} + c/12 (n^3 - n) delta_{n,-m} and
// [L_n, Lbar_m] = 0 on every test monomial. Reuses applications across pairs.
class CommutatorVerifier {
 public:
  CommutatorVerifier(OperatorTable& table, int max_weighted_degree);
  // Builds every operator a sweep up to max_mode will touch, once, at full index range.
  void prepare(int max_mode);
  CheckResult check(int n, int m);
  CheckResult sweep(int max_mode);

 private:
  const StatePoly& once(Family f, int mode, std::size_t s);
  const StatePoly& twice(Family f1, int n, Family f2, int m, std::size_t s);
  OperatorTable& table_;
  std::vector<sym::Monomial> monomials_;
  std::map<std::tuple<int, int, std::size_t>, StatePoly> once_;
  std::map<std::tuple<int, int, int, int, std::size_t>, StatePoly> twice_;
};

CheckResult commutator_check(OperatorTable& table, int n, int m, int max_weighted_degree);

// L_n 1 = Lbar_n 1 = 0 for 1 <= n <= max_mode, L_0 1 = Lbar_0 1 = lambda.
CheckResult highest_weight_check(OperatorTable& table, int max_mode);

// Degree structure of the d/da_m and d/dabar_m coefficients for |n| <= max_mode,
// m <= max_index: left degree m - n for d/da_m; left - right = -(n + m) and
// weighted degree <= m - n for d/dabar_m.
CheckResult degree_constraints(OperatorTable& table, int max_mode, int max_index);

// (l - 1) L_{-l-1} = [L_{-1}, L_{-l}] with both sides residue-built, and the
// recursion-built L_{-l-1} against the residue-built one.
CheckResult recursion_check(int ell, int max_index);

// Residue-built L_n against the closed forms (n >= -1) and the solver (n = -2).
CheckResult explicit_agreement(int min_mode, int max_mode, int max_index);
CheckResult solver_agreement(int max_index);

// Rebuilding with a larger internal series order leaves coefficients unchanged.
CheckResult order_independence(int n, int max_index, int extra_order = 4);

// (L_{-1}^2 - 2/3 (2 lambda + 1) L_{-2}) 1 vanishes as a rational function of
// kappa for lambda = (6 - kappa)/(2 kappa) and lambda = (3 kappa - 8)/16.
CheckResult singular_vector_identity(OperatorTable& table);

}  // namespace slecft::geom
