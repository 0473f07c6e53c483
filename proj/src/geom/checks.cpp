#include "slecft/geom/checks.hpp"

#include <cstdlib>
#include <stdexcept>

#include "slecft/geom/builders.hpp"
#include "slecft/symbolic/linalg.hpp"
#include "slecft/verma/verma.hpp"

namespace slecft::geom {

using sym::make_rational;
using sym::Monomial;
using sym::Partition;

namespace {

CoeffPoly lam() { return CoeffPoly::gen(Generator::lambda()); }
CoeffPoly cc() { return CoeffPoly::gen(Generator::cc()); }

std::string show(const StatePoly& s) { return s.poly.to_string() + " (level " + std::to_string(s.level) + ")"; }

}  // namespace

StatePoly psi(OperatorTable& table, const Partition& k, const Partition& kbar) {
  StatePoly s = StatePoly::one();
  for (auto [fam, part] : {std::pair{Family::Lbar, &kbar}, std::pair{Family::L, &k}})
    for (int m = 1; m <= part->largest_part(); ++m)
      for (std::uint32_t r = 0; r < part->multiplicity(m); ++r) s = table.apply(fam, -m, s);
  return s;
}

StatePoly apply_raising(OperatorTable& table, Family f, const Partition& kprime, StatePoly s) {
  for (int m = kprime.largest_part(); m >= 1; --m)
    for (std::uint32_t r = 0; r < kprime.multiplicity(m); ++r) s = table.apply(f, m, s);
  return s;
}

std::size_t level_rank(OperatorTable& table, const Rational& weight, const Rational& cc_value, int N) {
  if (N < 0) throw std::invalid_argument("level_rank: N must be >= 0");
  auto basis = sym::partitions_of(N);
  std::map<Generator, Rational> at = {{Generator::lambda(), weight}, {Generator::cc(), cc_value}};
  std::vector<Monomial> monos = monomials_of_bidegree(N, 0);
  sym::RationalMatrix rows;
  for (auto& k : basis) {
    CoeffPoly p = psi(table, k, Partition()).poly.substitute(at);
    sym::RationalVector row;
    for (auto& m : monos) row.push_back(p.coefficient(m));
    rows.push_back(std::move(row));
  }
  return sym::rank(rows);
}

CoeffPoly duality_pairing(OperatorTable& table, const Partition& k) {
  StatePoly s = StatePoly::monomial(coordinate_monomial(k, Partition()));
  return apply_raising(table, Family::L, k, s).poly;
}

CheckResult duality_check(OperatorTable& table, int max_level) {
  CheckResult r;
  for (int N = 0; N <= max_level; ++N) {
    for (auto& k : sym::partitions_of(N)) {
      Rational expected = 1;
      for (int m = 1; m <= k.largest_part(); ++m) {
        for (std::uint32_t j = 1; j <= k.multiplicity(m); ++j) expected *= Rational(j);
        if (k.multiplicity(m) % 2) expected = -expected;
      }
      CoeffPoly got = duality_pairing(table, k);
      ++r.cases;
      if (!(got == CoeffPoly(expected)))
        r.fail("k=" + k.to_string() + ": got " + got.to_string() + ", expected " + sym::to_canonical(expected));
    }
  }
  if (r.ok) r.witness = std::to_string(r.cases) + " partitions with |k| <= " + std::to_string(max_level);
  return r;
}

CheckResult gram_consistency(OperatorTable& table, int N) {
  CheckResult r;
  verma::GramMatrix g = verma::gram(N);
  for (std::size_t i = 0; i < g.basis.size(); ++i) {
    StatePoly s = psi(table, g.basis[i], Partition());
    for (std::size_t j = 0; j < g.basis.size(); ++j) {
      StatePoly out = apply_raising(table, Family::L, g.basis[j], s);
      ++r.cases;
      if (out.level != 0 || !(out.poly == g.entries[i][j]))
        r.fail("N=" + std::to_string(N) + " k=" + g.basis[i].to_string() + " k'=" + g.basis[j].to_string() +
               ": geometric " + show(out) + ", verma " + g.entries[i][j].to_string());
    }
  }
  if (r.ok) r.witness = "level " + std::to_string(N) + ": " + std::to_string(r.cases) + " entries agree";
  return r;
}

std::vector<Monomial> test_monomials(int max_weighted_degree) {
  std::vector<Monomial> out;
  for (int total = 0; total <= max_weighted_degree; ++total)
    for (int left = total; left >= 0; --left)
      for (auto& m : monomials_of_bidegree(left, total - left)) out.push_back(m);
  return out;
}

// ------------------------------------------------------- CommutatorVerifier

CommutatorVerifier::CommutatorVerifier(OperatorTable& table, int max_weighted_degree)
    : table_(table), monomials_(test_monomials(max_weighted_degree)) {}

const StatePoly& CommutatorVerifier::once(Family f, int mode, std::size_t s) {
  auto key = std::make_tuple(static_cast<int>(f), mode, s);
  auto it = once_.find(key);
  if (it != once_.end()) return it->second;
  StatePoly out = table_.apply(f, mode, StatePoly::monomial(monomials_[s]));
  return once_.emplace(key, std::move(out)).first->second;
}

const StatePoly& CommutatorVerifier::twice(Family f1, int n, Family f2, int m, std::size_t s) {
  auto key = std::make_tuple(static_cast<int>(f1), n, static_cast<int>(f2), m, s);
  auto it = twice_.find(key);
  if (it != twice_.end()) return it->second;
  StatePoly out = table_.apply(f1, n, once(f2, m, s));
  return twice_.emplace(key, std::move(out)).first->second;
}

CheckResult CommutatorVerifier::check(int n, int m) {
  CheckResult r;
  const long cub = static_cast<long>(n) * n * n - n;
  const CoeffPoly central = (n == -m) ? cc() * make_rational(cub, 12) : CoeffPoly();
  for (std::size_t s = 0; s < monomials_.size(); ++s) {
    StatePoly S = StatePoly::monomial(monomials_[s]);
    const StatePoly& nm = twice(Family::L, n, Family::L, m, s);
    const StatePoly& mn = twice(Family::L, m, Family::L, n, s);
    CoeffPoly lhs = nm.poly - mn.poly;
    CoeffPoly rhs = once(Family::L, n + m, s).poly * Rational(n - m) + central * S.poly;
    ++r.cases;
    if (!(lhs == rhs) || nm.level != mn.level) {
      r.fail("[L_" + std::to_string(n) + ", L_" + std::to_string(m) + "] on " + monomials_[s].to_string() +
             ": lhs " + lhs.to_string() + ", rhs " + rhs.to_string());
    }
    const StatePoly& nb = twice(Family::L, n, Family::Lbar, m, s);
    const StatePoly& bn = twice(Family::Lbar, m, Family::L, n, s);
    CoeffPoly mixed = nb.poly - bn.poly;
    ++r.cases;
    if (!mixed.is_zero())
      r.fail("[L_" + std::to_string(n) + ", Lbar_" + std::to_string(m) + "] on " + monomials_[s].to_string() + ": " +
             mixed.to_string());
  }
  return r;
}

void CommutatorVerifier::prepare(int max_mode) {
  int deg = 0;
  for (auto& m : monomials_) deg = std::max<int>(deg, static_cast<int>(m.left_degree() + m.right_degree()));
  for (int n = -max_mode; n <= max_mode; ++n) {
    table_.get(Family::L, n, deg + max_mode);
    table_.get(Family::Lbar, n, deg + max_mode);
  }
  for (int n = -2 * max_mode; n <= 2 * max_mode; ++n) table_.get(Family::L, n, deg);
}

CheckResult CommutatorVerifier::sweep(int max_mode) {
  prepare(max_mode);
  CheckResult total;
  std::size_t pairs = 0;
  for (int n = -max_mode; n <= max_mode; ++n) {
    for (int m = -max_mode; m <= max_mode; ++m) {
      CheckResult r = check(n, m);
      total.cases += r.cases;
      ++pairs;
      if (!r.ok) total.fail(r.witness);
    }
  }
  if (total.ok)
    total.witness = std::to_string(pairs) + " mode pairs on " + std::to_string(monomials_.size()) + " monomials";
  return total;
}

CheckResult commutator_check(OperatorTable& table, int n, int m, int max_weighted_degree) {
  CommutatorVerifier v(table, max_weighted_degree);
  return v.check(n, m);
}

CheckResult highest_weight_check(OperatorTable& table, int max_mode) {
  CheckResult r;
  for (Family f : {Family::L, Family::Lbar}) {
    for (int n = 1; n <= max_mode; ++n) {
      StatePoly out = table.apply(f, n, StatePoly::one());
      ++r.cases;
      if (!out.poly.is_zero()) r.fail(to_string(f) + "_" + std::to_string(n) + " 1 = " + out.poly.to_string());
    }
    StatePoly zero = table.apply(f, 0, StatePoly::one());
    ++r.cases;
    if (!(zero.poly == lam()) || zero.level != 0) r.fail(to_string(f) + "_0 1 = " + zero.poly.to_string());
  }
  if (r.ok) r.witness = "modes 1.." + std::to_string(max_mode) + " annihilate 1; L_0 1 = lambda";
  return r;
}

CheckResult degree_constraints(OperatorTable& table, int max_mode, int max_index) {
  CheckResult r;
  for (int n = -max_mode; n <= max_mode; ++n) {
    DiffOperator op = table.get(Family::L, n, max_index);
    for (int m = 1; m <= max_index; ++m) {
      auto am = Generator::a(static_cast<std::uint32_t>(m));
      auto bm = Generator::abar(static_cast<std::uint32_t>(m));
      CoeffPoly p = op.derivation(am), q = op.derivation(bm);
      const long pl = std::max(m - n, 0);
      for (auto& t : p.terms()) {
        ++r.cases;
        if (t.mono.has_non_coordinate() || t.mono.right_degree() != 0 || t.mono.left_degree() != pl)
          r.fail("L_" + std::to_string(n) + " d/da_" + std::to_string(m) + " has monomial " + t.mono.to_string());
      }
      // (N - Nbar) Q = -(n + m) Q
      const long diff = -(n + m);
      for (auto& t : q.terms()) {
        ++r.cases;
        if (n >= 1) {
          r.fail("L_" + std::to_string(n) + " has a d/dabar_" + std::to_string(m) + " term");
          continue;
        }
        long left = t.mono.left_degree(), right = t.mono.right_degree();
        if (t.mono.has_non_coordinate() || left - right != diff)
          r.fail("L_" + std::to_string(n) + " d/dabar_" + std::to_string(m) + " has monomial " + t.mono.to_string());
        if (left + right > m - n)
          r.fail("L_" + std::to_string(n) + " d/dabar_" + std::to_string(m) + " exceeds degree " +
                 std::to_string(m - n) + ": " + t.mono.to_string());
      }
    }
  }
  if (r.ok)
    r.witness = std::to_string(r.cases) + " monomials checked for |n| <= " + std::to_string(max_mode) +
                ", m <= " + std::to_string(max_index);
  return r;
}

CheckResult recursion_check(int ell, int max_index) {
  CheckResult r;
  // Identity between residue-built operators.
  DiffOperator lm1 = build_L(-1, max_index + ell);
  DiffOperator lml = build_L(-ell, max_index + 1);
  DiffOperator rhs = commutator(lm1, lml).restricted(max_index);
  DiffOperator lhs = (Rational(ell - 1) * build_L(-ell - 1, max_index)).restricted(max_index);
  ++r.cases;
  std::string diff = first_difference(lhs, rhs, max_index);
  if (!diff.empty()) r.fail("(l-1) L_{-l-1} vs [L_{-1}, L_{-l}] at l=" + std::to_string(ell) + ": " + diff);
  // Recursion-built operator against the residue-built one.
  if (ell + 1 >= 3) {
    DiffOperator rec = build_by_recursion(-ell - 1, max_index);
    DiffOperator res = build_L(-ell - 1, max_index);
    ++r.cases;
    diff = first_difference(rec, res, max_index);
    if (!diff.empty()) r.fail("recursion vs residue for L_" + std::to_string(-ell - 1) + ": " + diff);
  }
  if (r.ok) r.witness = "l=" + std::to_string(ell) + ", index <= " + std::to_string(max_index);
  return r;
}

CheckResult explicit_agreement(int min_mode, int max_mode, int max_index) {
  CheckResult r;
  for (int n = std::max(min_mode, -1); n <= max_mode; ++n) {
    ++r.cases;
    std::string diff = first_difference(build_L(n, max_index), build_explicit(n, max_index), max_index);
    if (!diff.empty()) r.fail("L_" + std::to_string(n) + ": " + diff);
  }
  return r;
}

CheckResult solver_agreement(int max_index) {
  CheckResult r;
  SolverResult s = solve_L_minus_two(max_index, true);
  ++r.cases;
  if (!s.consistent) {
    r.fail("constraint system for L_{-2} is inconsistent");
    return r;
  }
  if (s.nullity != 0) r.fail("constraint system for L_{-2} leaves " + std::to_string(s.nullity) + " free directions");
  std::string diff = first_difference(s.op, build_L(-2, max_index), max_index);
  if (!diff.empty()) r.fail("solver vs residue L_{-2}: " + diff);
  if (r.ok)
    r.witness = std::to_string(s.unknowns) + " unknowns, " + std::to_string(s.equations) + " equations, unique";
  return r;
}

CheckResult order_independence(int n, int max_index, int extra_order) {
  CheckResult r;
  ++r.cases;
  std::string diff = first_difference(build_L(n, max_index), build_L(n, max_index, extra_order), max_index);
  if (!diff.empty()) r.fail("L_" + std::to_string(n) + " changes with series order: " + diff);
  return r;
}

// ------------------------------------------------ kappa-identity machinery

namespace {

// Dense polynomial in kappa with rational coefficients.
using KPoly = std::vector<Rational>;

KPoly kmul(const KPoly& x, const KPoly& y) {
  if (x.empty() || y.empty()) return {};
  KPoly r(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  return r;
}

KPoly kpow(const KPoly& x, unsigned e) {
  KPoly r = {Rational(1)};
  for (unsigned k = 0; k < e; ++k) r = kmul(r, x);
  return r;
}

void kadd(KPoly& acc, const KPoly& x, const Rational& s) {
  if (acc.size() < x.size()) acc.resize(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] += s * x[i];
}

bool kzero(const KPoly& x) {
  for (auto& v : x)
    if (v != 0) return false;
  return true;
}

struct KRational {
  KPoly num, den;
};

// Numerator (in kappa) of p after lambda = lam.num/lam.den and c = cv.num/cv.den,
// one entry per coordinate monomial.
std::map<std::string, KPoly> kappa_numerators(const CoeffPoly& p, const KRational& lamv, const KRational& cv) {
  const unsigned dl = p.degree_in(Generator::lambda()), dc = p.degree_in(Generator::cc());
  std::map<std::string, KPoly> out;
  for (auto& t : p.terms()) {
    unsigned i = t.mono.exponent(Generator::lambda()), j = t.mono.exponent(Generator::cc());
    KPoly term = kmul(kmul(kpow(lamv.num, i), kpow(lamv.den, dl - i)), kmul(kpow(cv.num, j), kpow(cv.den, dc - j)));
    Monomial coord = t.mono.without(Generator::lambda()).without(Generator::cc());
    kadd(out[coord.to_string()], term, t.coef);
  }
  return out;
}

}  // namespace

CheckResult singular_vector_identity(OperatorTable& table) {
  CheckResult r;
  StatePoly one = StatePoly::one();
  StatePoly l11 = table.apply(Family::L, -1, table.apply(Family::L, -1, one));
  StatePoly l2 = table.apply(Family::L, -2, one);
  CoeffPoly coef = (lam() * Rational(2) + CoeffPoly(1L)) * make_rational(2, 3);
  CoeffPoly expr = l11.poly - coef * l2.poly;
  // c = 13 - 24/kappa - 3 kappa/2 = (-3 kappa^2 + 26 kappa - 48) / (2 kappa)
  KRational cv{{Rational(-48), Rational(26), Rational(-3)}, {Rational(0), Rational(2)}};
  std::vector<std::pair<std::string, KRational>> choices = {
      {"lambda=(6-kappa)/(2kappa)", {{Rational(6), Rational(-1)}, {Rational(0), Rational(2)}}},
      {"lambda=(3kappa-8)/16", {{Rational(-8), Rational(3)}, {Rational(16)}}},
  };
  for (auto& [name, lv] : choices) {
    ++r.cases;
    for (auto& [mono, num] : kappa_numerators(expr, lv, cv))
      if (!kzero(num)) r.fail(name + ": coefficient of " + mono + " does not vanish identically in kappa");
  }
  if (expr.is_zero()) r.fail("expression vanishes before substitution; check is vacuous");
  if (r.ok) r.witness = "both Kac weights; expression " + expr.to_string();
  return r;
}

}  // namespace slecft::geom
