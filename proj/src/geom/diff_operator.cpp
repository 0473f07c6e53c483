#include "slecft/geom/diff_operator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace slecft::geom {

std::string to_string(Family f) { return f == Family::L ? "L" : "Lbar"; }

std::string to_string(BuildRoute r) {
  switch (r) {
    case BuildRoute::Residue: return "residue";
    case BuildRoute::Recursion: return "recursion";
    case BuildRoute::Explicit: return "explicit";
    case BuildRoute::Solver: return "solver";
    case BuildRoute::Derived: return "derived";
  }
  return "?";
}

StatePoly StatePoly::monomial(const sym::Monomial& m) {
  return {static_cast<int>(m.left_degree() + m.right_degree()), CoeffPoly::monomial(m)};
}

CoeffPoly DiffOperator::derivation(Generator g) const {
  auto it = derivations.find(g.key());
  return it == derivations.end() ? CoeffPoly() : it->second;
}

void DiffOperator::set_derivation(Generator g, CoeffPoly c) {
  if (c.is_zero())
    derivations.erase(g.key());
  else
    derivations[g.key()] = std::move(c);
}

CoeffPoly DiffOperator::vector_apply(const CoeffPoly& p) const {
  if (p.max_coordinate_index() > static_cast<std::uint32_t>(max_index))
    throw std::out_of_range("operator " + describe() + " applied to a polynomial with index " +
                            std::to_string(p.max_coordinate_index()));
  sym::PolyAccumulator acc;
  for (auto& t : p.terms()) {
    for (auto& v : t.mono.powers()) {
      if ((v.key >> 24) > 1) continue;
      auto it = derivations.find(v.key);
      if (it == derivations.end()) continue;
      auto [exp, rest] = t.mono.divide_by(Generator::from_key(v.key));
      acc.add_times_monomial(it->second, rest, t.coef * exp);
    }
  }
  return acc.finish();
}

DiffOperator DiffOperator::restricted(int m) const {
  if (m > max_index) throw std::out_of_range("restricted: index beyond the built range");
  DiffOperator r = *this;
  r.max_index = m;
  for (auto it = r.derivations.begin(); it != r.derivations.end();) {
    if (static_cast<int>(it->first & 0xFFFFFFu) > m)
      it = r.derivations.erase(it);
    else
      ++it;
  }
  return r;
}

bool DiffOperator::operator==(const DiffOperator& o) const {
  return mode == o.mode && max_index == o.max_index && e == o.e && scalar == o.scalar && derivations == o.derivations;
}

std::string DiffOperator::describe() const {
  return to_string(family) + "_" + std::to_string(mode) + "[index<=" + std::to_string(max_index) + "]";
}

StatePoly apply(const DiffOperator& op, const StatePoly& s) {
  StatePoly out;
  out.level = s.level - op.mode;
  if (s.poly.is_zero()) return out;
  sym::PolyAccumulator acc;
  if (!op.e.is_zero()) {
    // e (2 lambda + L) S
    CoeffPoly grade = CoeffPoly::gen(Generator::lambda()) * Rational(2) + CoeffPoly(Rational(s.level));
    CoeffPoly eg = op.e * grade;
    acc.add_product(eg, s.poly);
  }
  if (!op.scalar.is_zero()) acc.add_product(op.scalar, s.poly);
  acc.add(op.vector_apply(s.poly));
  out.poly = acc.finish();
  return out;
}

namespace {

int derivation_index(std::uint32_t key) { return static_cast<int>(key & 0xFFFFFFu); }

std::set<std::uint32_t> union_keys(const DiffOperator& x, const DiffOperator& y, int max_index) {
  std::set<std::uint32_t> keys;
  for (auto& [k, _] : x.derivations)
    if (derivation_index(k) <= max_index) keys.insert(k);
  for (auto& [k, _] : y.derivations)
    if (derivation_index(k) <= max_index) keys.insert(k);
  return keys;
}

}  // namespace

DiffOperator commutator(const DiffOperator& x, const DiffOperator& y) {
  const int n = x.mode, m = y.mode;
  DiffOperator r;
  r.mode = n + m;
  r.family = x.family;
  r.provenance.route = BuildRoute::Derived;
  // x's vector field must reach every variable of y's coefficients and vice
  // versa; for the Virasoro operators these reach index i + max(0, -mode).
  r.max_index = std::min(x.max_index - std::max(0, -m), y.max_index - std::max(0, -n));
  if (r.max_index < 0) throw std::out_of_range("commutator: operators built with too small an index range");
  const Rational rn(n);
  // e' = (n - m) e_x e_y + X(e_y) - Y(e_x)
  r.e = x.e * y.e * Rational(n - m) + x.vector_apply(y.e) - y.vector_apply(x.e);
  // s' = -m e_x s_y + n e_y s_x + X(s_y) - Y(s_x)
  r.scalar = x.e * y.scalar * Rational(-m) + y.e * x.scalar * rn + x.vector_apply(y.scalar) - y.vector_apply(x.scalar);
  for (auto key : union_keys(x, y, r.max_index)) {
    Generator g = Generator::from_key(key);
    CoeffPoly xi = x.derivation(g), yi = y.derivation(g);
    // x'_i = -m e_x y_i + n e_y x_i + X(y_i) - Y(x_i)
    CoeffPoly v = x.e * yi * Rational(-m) + y.e * xi * rn + x.vector_apply(yi) - y.vector_apply(xi);
    r.set_derivation(g, std::move(v));
  }
  return r;
}

DiffOperator operator+(const DiffOperator& x, const DiffOperator& y) {
  if (x.mode != y.mode) throw std::invalid_argument("adding operators of different modes");
  DiffOperator r;
  r.mode = x.mode;
  r.family = x.family;
  r.max_index = std::min(x.max_index, y.max_index);
  r.e = x.e + y.e;
  r.scalar = x.scalar + y.scalar;
  for (auto key : union_keys(x, y, r.max_index)) {
    Generator g = Generator::from_key(key);
    r.set_derivation(g, x.derivation(g) + y.derivation(g));
  }
  return r;
}

DiffOperator operator*(const Rational& s, const DiffOperator& x) {
  DiffOperator r = x;
  r.provenance.route = BuildRoute::Derived;
  r.e = x.e * s;
  r.scalar = x.scalar * s;
  r.derivations.clear();
  for (auto& [k, c] : x.derivations) r.set_derivation(Generator::from_key(k), c * s);
  return r;
}

DiffOperator operator-(const DiffOperator& x, const DiffOperator& y) { return x + Rational(-1) * y; }

DiffOperator plus_scalar(DiffOperator x, const CoeffPoly& s) {
  x.scalar += s;
  return x;
}

DiffOperator mirrored(const DiffOperator& x) {
  DiffOperator r;
  r.mode = x.mode;
  r.family = x.family == Family::L ? Family::Lbar : Family::L;
  r.max_index = x.max_index;
  r.e = x.e.mirrored();
  r.scalar = x.scalar.mirrored();
  for (auto& [k, c] : x.derivations) r.derivations[sym::mirror_key(k)] = c.mirrored();
  r.provenance = x.provenance;
  return r;
}

std::string first_difference(const DiffOperator& x, const DiffOperator& y, int m) {
  if (x.mode != y.mode) return "mode " + std::to_string(x.mode) + " vs " + std::to_string(y.mode);
  if (!(x.e == y.e)) return "E coefficient: " + x.e.to_string() + " vs " + y.e.to_string();
  if (!(x.scalar == y.scalar)) return "scalar part: " + x.scalar.to_string() + " vs " + y.scalar.to_string();
  for (auto key : union_keys(x, y, m)) {
    Generator g = Generator::from_key(key);
    CoeffPoly a = x.derivation(g), b = y.derivation(g);
    if (!(a == b)) return "d/d" + g.name() + ": " + a.to_string() + " vs " + b.to_string();
  }
  return {};
}

}  // namespace slecft::geom
