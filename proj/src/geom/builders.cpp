#include "slecft/geom/builders.hpp"

#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

#include "slecft/symbolic/laurent_series.hpp"
#include "slecft/symbolic/linalg.hpp"

namespace slecft::geom {

using sym::LaurentSeries;
using sym::make_rational;
using sym::Monomial;
using sym::Partition;

namespace {

CoeffPoly a(int j) { return j == 0 ? CoeffPoly(1L) : CoeffPoly::gen(Generator::a(static_cast<std::uint32_t>(j))); }
CoeffPoly abar(int j) { return j == 0 ? CoeffPoly(1L) : CoeffPoly::gen(Generator::abar(static_cast<std::uint32_t>(j))); }

// 1 + sum a_j z^j and f' = sum (j+1) a_j z^j, both O(z^order).
LaurentSeries unit_part(int order) {
  std::vector<CoeffPoly> u(static_cast<std::size_t>(order));
  for (int j = 0; j < order; ++j) u[static_cast<std::size_t>(j)] = a(j);
  return LaurentSeries(0, std::move(u), order);
}

LaurentSeries derivative_part(int order) {
  std::vector<CoeffPoly> u(static_cast<std::size_t>(order));
  for (int j = 0; j < order; ++j) u[static_cast<std::size_t>(j)] = a(j) * Rational(j + 1);
  return LaurentSeries(0, std::move(u), order);
}

// Inverse map G of f = z(1 + sum a_j z^j), O(z^order).
LaurentSeries inverse_map(int order) { return unit_part(order - 1).shifted(1).reversion(); }

void check_index(int max_index) {
  if (max_index < 1) throw std::invalid_argument("max_index must be >= 1");
}

}  // namespace

int default_series_order(int n, int max_index) { return max_index + std::abs(n) + 2; }

CoeffPoly varpi(int n) {
  int order = std::abs(n) + 5;
  LaurentSeries g = inverse_map(order);
  LaurentSeries ratio = g.derivative() / g;
  return (ratio * ratio).coefficient(-n - 2) * make_rational(-1, 2);
}

CoeffPoly vartheta(int n) {
  int k = -n - 2;
  if (k < 0) return {};
  LaurentSeries g = inverse_map(k + 5);
  return -g.schwarzian().coefficient(k);
}

DiffOperator build_L(int n, int max_index, int extra_order) {
  check_index(max_index);
  if (extra_order < 0) throw std::invalid_argument("extra_order must be >= 0");
  const int R = default_series_order(n, max_index) + extra_order;
  LaurentSeries u = unit_part(R);
  LaurentSeries fp = derivative_part(R);
  LaurentSeries phi = -(u.pow(n + 1) * fp.inverse()).shifted(n + 1);

  DiffOperator op;
  op.mode = n;
  op.family = Family::L;
  op.max_index = max_index;
  op.provenance = {BuildRoute::Residue, R};
  const CoeffPoly phi1 = phi.coefficient(1);
  op.e = phi1 * make_rational(-1, 2);
  op.scalar = vartheta(n) * CoeffPoly::gen(Generator::cc()) * make_rational(-1, 12);
  for (int m = 1; m <= max_index; ++m) {
    sym::PolyAccumulator p;
    for (int j = std::max(2, phi.valuation()); j <= m + 1; ++j) p.add_product(phi.coefficient(j), a(m + 1 - j) * Rational(m + 2 - j));
    p.add_product(phi1, a(m), make_rational(m, 2));
    op.set_derivation(Generator::a(static_cast<std::uint32_t>(m)), p.finish());

    sym::PolyAccumulator q;
    for (int j = 0; j <= m - 1 && -j >= phi.valuation(); ++j)
      q.add_product(phi.coefficient(-j), abar(m - 1 - j) * Rational(m - j));
    q.add_product(phi1, abar(m), make_rational(m, 2));
    op.set_derivation(Generator::abar(static_cast<std::uint32_t>(m)), q.finish());
  }
  return op;
}

DiffOperator build_Lbar(int n, int max_index, int extra_order) { return mirrored(build_L(n, max_index, extra_order)); }

DiffOperator build_explicit(int n, int max_index) {
  check_index(max_index);
  DiffOperator op;
  op.mode = n;
  op.family = Family::L;
  op.max_index = max_index;
  op.provenance = {BuildRoute::Explicit, 0};
  if (n >= 1) {
    const int order = max_index + 2;
    LaurentSeries f = unit_part(order - 1).shifted(1);
    LaurentSeries fn = f.pow(n + 1);
    op.provenance.series_order = order;
    for (int m = 1; m <= max_index; ++m) op.set_derivation(Generator::a(static_cast<std::uint32_t>(m)), -fn.coefficient(m + 1));
  } else if (n == 0) {
    op.e = CoeffPoly(make_rational(1, 2));
    for (int m = 1; m <= max_index; ++m) {
      op.set_derivation(Generator::a(static_cast<std::uint32_t>(m)), a(m) * make_rational(m, 2));
      op.set_derivation(Generator::abar(static_cast<std::uint32_t>(m)), abar(m) * make_rational(-m, 2));
    }
  } else if (n == -1) {
    op.e = -a(1);
    for (int m = 1; m <= max_index; ++m) {
      op.set_derivation(Generator::a(static_cast<std::uint32_t>(m)), (a(m + 1) - a(1) * a(m)) * Rational(m + 2));
      op.set_derivation(Generator::abar(static_cast<std::uint32_t>(m)), (a(1) * abar(m) - abar(m - 1)) * Rational(m));
    }
  } else {
    throw std::invalid_argument("build_explicit: no closed form for mode " + std::to_string(n));
  }
  return op;
}

DiffOperator build_by_recursion(int n, int max_index) {
  check_index(max_index);
  if (n > -3) throw std::invalid_argument("build_by_recursion: mode must be <= -3");
  // L_n = [L_{-1}, L_{n+1}] / (-n - 2)
  const int prev = n + 1;
  DiffOperator lower = prev == -2 ? build_L(-2, max_index + 1) : build_by_recursion(prev, max_index + 1);
  DiffOperator lm1 = build_explicit(-1, max_index - prev);
  DiffOperator op = make_rational(1, -n - 2) * commutator(lm1, lower);
  op = op.restricted(max_index);
  op.family = Family::L;
  op.provenance = {BuildRoute::Recursion, 0};
  return op;
}

std::vector<Monomial> monomials_of_bidegree(int left, int right) {
  std::vector<Monomial> out;
  if (left < 0 || right < 0) return out;
  for (auto& k : sym::partitions_of(left))
    for (auto& kb : sym::partitions_of(right)) out.push_back(coordinate_monomial(k, kb));
  return out;
}

Monomial coordinate_monomial(const Partition& k, const Partition& kbar) {
  Monomial m;
  for (int j = 1; j <= k.largest_part(); ++j)
    if (k.multiplicity(j)) m = m * Monomial(Generator::a(static_cast<std::uint32_t>(j)), k.multiplicity(j));
  for (int j = 1; j <= kbar.largest_part(); ++j)
    if (kbar.multiplicity(j)) m = m * Monomial(Generator::abar(static_cast<std::uint32_t>(j)), kbar.multiplicity(j));
  return m;
}

namespace {

using Coordinates = std::unordered_map<std::string, Rational>;

void flatten_into(const DiffOperator& op, int max_index, const std::string& tag, Coordinates& out) {
  auto put = [&](const std::string& slot, const CoeffPoly& p) {
    for (auto& t : p.terms()) out[tag + "|" + slot + "|" + t.mono.to_string()] += t.coef;
  };
  put("E", op.e);
  put("S", op.scalar);
  for (auto& [key, c] : op.derivations)
    if (static_cast<int>(key & 0xFFFFFFu) <= max_index) put(Generator::from_key(key).name(), c);
}

}  // namespace

SolverResult solve_L_minus_two(int max_index, bool bar_constraints) {
  check_index(max_index);
  const int M = max_index;
  const CoeffPoly lam = CoeffPoly::gen(Generator::lambda());
  const CoeffPoly c = CoeffPoly::gen(Generator::cc());
  // X 1 = e (2 lambda) + scalar
  const CoeffPoly anchor = lam * a(1) * a(1) * Rational(3) - (lam * Rational(4) + c * make_rational(1, 2)) * (a(2) - a(1) * a(1));
  DiffOperator known;
  known.mode = -2;
  known.max_index = M;
  known.e = anchor.coefficient_of(Generator::lambda(), 1) * make_rational(1, 2);
  known.scalar = anchor.coefficient_of(Generator::lambda(), 0);

  struct Unknown {
    Generator slot;
    Monomial mono;
  };
  std::vector<Unknown> unknowns;
  for (int m = 1; m <= M; ++m) {
    for (auto& mono : monomials_of_bidegree(m + 2, 0)) unknowns.push_back({Generator::a(static_cast<std::uint32_t>(m)), mono});
    // left - right = 2 - m, left + right <= m + 2
    for (int left = std::max(0, 2 - m); left <= 2; ++left)
      for (auto& mono : monomials_of_bidegree(left, left + m - 2))
        unknowns.push_back({Generator::abar(static_cast<std::uint32_t>(m)), mono});
  }

  const int wide = M + 2;
  struct Constraint {
    std::string tag;
    DiffOperator lhs;  // operator commuted with X
    DiffOperator rhs;  // required value of [lhs, X]
  };
  std::vector<Constraint> constraints;
  DiffOperator l1 = build_explicit(1, wide), l2 = build_explicit(2, wide);
  constraints.push_back({"L1", l1, Rational(3) * build_explicit(-1, M + 1)});
  constraints.push_back({"L2", l2, plus_scalar(Rational(4) * build_explicit(0, M + 1), c * make_rational(1, 2))});
  if (bar_constraints) {
    DiffOperator zero_m1, zero_0;
    zero_m1.mode = -1;
    zero_m1.family = Family::Lbar;
    zero_m1.max_index = M + 1;
    zero_0 = zero_m1;
    zero_0.mode = 0;
    DiffOperator zero_m3 = zero_m1;
    zero_m3.mode = -3;
    constraints.push_back({"Lbar1", mirrored(l1), zero_m1});
    constraints.push_back({"Lbar2", mirrored(l2), zero_0});
    constraints.push_back({"Lbar-1", mirrored(build_explicit(-1, wide)), zero_m3});
  }

  // Rows: coordinates of [lhs, X0] - rhs (constant) and [lhs, E_u] (columns).
  std::unordered_map<std::string, std::size_t> row_of;
  std::vector<Coordinates> columns(unknowns.size());
  Coordinates constant;
  for (auto& con : constraints) {
    Coordinates base;
    DiffOperator r0 = commutator(con.lhs, known) - con.rhs;
    flatten_into(r0, r0.max_index, con.tag, base);
    for (auto& [k, v] : base) constant[k] += v;
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      DiffOperator eu;
      eu.mode = -2;
      eu.max_index = M;
      eu.set_derivation(unknowns[u].slot, CoeffPoly::monomial(unknowns[u].mono));
      DiffOperator ru = commutator(con.lhs, eu);
      flatten_into(ru, r0.max_index, con.tag, columns[u]);
    }
  }
  auto row = [&](const std::string& key) {
    auto [it, inserted] = row_of.try_emplace(key, row_of.size());
    return it->second;
  };
  for (auto& [k, v] : constant) row(k);
  for (auto& col : columns)
    for (auto& [k, v] : col) row(k);

  sym::RationalMatrix A(row_of.size(), sym::RationalVector(unknowns.size(), 0));
  sym::RationalVector b(row_of.size(), 0);
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    for (auto& [k, v] : columns[u]) A[row_of.at(k)][u] += v;
  for (auto& [k, v] : constant) b[row_of.at(k)] -= v;

  SolverResult result;
  result.unknowns = unknowns.size();
  result.equations = row_of.size();
  auto sol = sym::solve(A, b);
  result.op = known;
  result.op.provenance = {BuildRoute::Solver, 0};
  if (!sol) return result;
  result.consistent = true;
  result.nullity = sol->nullity;
  std::map<std::uint32_t, sym::PolyAccumulator> acc;
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    if (sol->x[u] != 0) acc[unknowns[u].slot.key()].add(unknowns[u].mono, sol->x[u]);
  for (auto& [key, p] : acc) result.op.set_derivation(Generator::from_key(key), p.finish());
  return result;
}

}  // namespace slecft::geom
