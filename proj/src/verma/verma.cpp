#include "slecft/verma/verma.hpp"

#include <stdexcept>

#include "slecft/symbolic/laurent_series.hpp"

namespace slecft::verma {

using sym::Generator;
using sym::LaurentSeries;

// ------------------------------------------------------------ VermaElement

VermaElement VermaElement::basis(const Partition& k, const CoeffPoly& c) {
  VermaElement v;
  v.add(k, c);
  return v;
}

CoeffPoly VermaElement::coefficient(const Partition& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? CoeffPoly() : it->second;
}

void VermaElement::add(const Partition& k, const CoeffPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

VermaElement& VermaElement::operator+=(const VermaElement& o) {
  for (auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

VermaElement VermaElement::operator+(const VermaElement& o) const {
  VermaElement r = *this;
  r += o;
  return r;
}

VermaElement VermaElement::operator-(const VermaElement& o) const { return *this + o * CoeffPoly(-1L); }

VermaElement VermaElement::operator*(const CoeffPoly& s) const {
  VermaElement r;
  for (auto& [k, c] : terms_) r.add(k, c * s);
  return r;
}

VermaElement VermaElement::substitute(const std::map<Generator, Rational>& assignment) const {
  VermaElement r;
  for (auto& [k, c] : terms_) r.add(k, c.substitute(assignment));
  return r;
}

std::string VermaElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*e" + k.to_string();
  }
  return s;
}

// ------------------------------------------------------------- VermaModule

namespace {

Partition remove_part(const Partition& k, int m) {
  auto mult = k.mult();
  --mult[static_cast<std::size_t>(m - 1)];
  return Partition::from_multiplicities(std::move(mult));
}

Partition add_part(const Partition& k, int m) {
  auto mult = k.mult();
  if (mult.size() < static_cast<std::size_t>(m)) mult.resize(static_cast<std::size_t>(m), 0);
  ++mult[static_cast<std::size_t>(m - 1)];
  return Partition::from_multiplicities(std::move(mult));
}

}  // namespace

VermaElement VermaModule::act(int n, const Partition& k) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find({n, k});
    if (it != memo_.end()) return it->second;
  }
  VermaElement r = act_uncached(n, k);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(std::make_pair(n, k), r);
  return r;
}

VermaElement VermaModule::act_uncached(int n, const Partition& k) {
  if (k.empty()) {
    if (n > 0) return {};
    if (n == 0) return VermaElement::basis(k, w_.lambda);
    return VermaElement::basis(Partition::from_parts({-n}));
  }
  int m1 = k.largest_part();
  if (n < 0 && -n >= m1) return VermaElement::basis(add_part(k, -n));
  // L_n L_{-m1} rest = L_{-m1} L_n rest + (n + m1) L_{n-m1} rest + [n = m1] c/12 (n^3 - n) rest
  Partition rest = remove_part(k, m1);
  VermaElement out = act(-m1, act(n, rest));
  if (n + m1 != 0) out += act(n - m1, rest) * CoeffPoly(Rational(n + m1));
  if (n == m1) {
    long cub = static_cast<long>(n) * n * n - n;
    out += VermaElement::basis(rest, w_.cc * sym::make_rational(cub, 12));
  }
  return out;
}

VermaElement VermaModule::act(int n, const VermaElement& v) {
  VermaElement out;
  for (auto& [k, c] : v.terms()) out += act(n, k) * c;
  return out;
}

VermaElement VermaModule::normal_order(const VirasoroWord& word) {
  VermaElement v = VermaElement::basis(Partition());
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = act(*it, v);
  return v;
}

VermaElement VermaModule::apply_raising(const Partition& kprime, VermaElement v) {
  for (int m = kprime.largest_part(); m >= 1; --m)
    for (std::uint32_t r = 0; r < kprime.multiplicity(m); ++r) v = act(m, v);
  return v;
}

std::size_t VermaModule::memo_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

VermaElement normal_order(const VirasoroWord& word, const Weights& w) {
  VermaModule module(w);
  return module.normal_order(word);
}

// ------------------------------------------------------------------- Gram

GramMatrix gram(int N, VermaModule& module) {
  GramMatrix g;
  g.level = N;
  g.basis = sym::partitions_of(N);
  std::size_t d = g.basis.size();
  g.entries.assign(d, std::vector<CoeffPoly>(d));
  for (std::size_t i = 0; i < d; ++i) {
    VermaElement v = VermaElement::basis(g.basis[i]);
    for (std::size_t j = 0; j < d; ++j) {
      VermaElement r = module.apply_raising(g.basis[j], v);
      for (auto& [k, c] : r.terms())
        if (!k.empty()) throw std::logic_error("gram: raising operator left level " + std::to_string(k.weight()));
      g.entries[i][j] = r.coefficient(Partition());
    }
  }
  return g;
}

GramMatrix gram(int N, const Weights& w) {
  if (N < 0) throw std::invalid_argument("gram: level must be >= 0");
  VermaModule module(w);
  return gram(N, module);
}

nlohmann::json to_json(const GramMatrix& g) {
  nlohmann::json j;
  j["level"] = g.level;
  j["basis"] = nlohmann::json::array();
  for (auto& k : g.basis) j["basis"].push_back(k.mult());
  j["entries"] = nlohmann::json::array();
  for (auto& row : g.entries) {
    nlohmann::json r = nlohmann::json::array();
    for (auto& e : row) r.push_back(e.to_string());
    j["entries"].push_back(r);
  }
  return j;
}

Rational kac_lambda(int r, int s, const Rational& kappa) {
  if (r < 1 || s < 1) throw std::invalid_argument("kac_lambda: r, s must be >= 1");
  if (kappa <= 0) throw std::invalid_argument("kac_lambda: kappa must be positive");
  Rational rr(r), ss(s);
  return (rr * rr - 1) * kappa / 16 + (ss * ss - 1) / kappa + Rational(1 - r * s) / 2;
}

CoeffPoly kac_det(int N, int max_level) {
  if (N < 0) throw std::invalid_argument("kac_det: level must be >= 0");
  if (N > max_level)
    throw std::invalid_argument("kac_det: level " + std::to_string(N) + " exceeds configured maximum " +
                                std::to_string(max_level));
  return sym::determinant(gram(N).entries);
}

std::vector<VermaElement> singular_vectors(int N, const Rational& weight, const Rational& cc) {
  GramMatrix g = gram(N, Weights::specialized(weight, cc));
  sym::RationalMatrix b = sym::specialize(g.entries, {});
  std::vector<VermaElement> out;
  for (auto& v : sym::kernel(b, g.basis.size())) {
    VermaElement e;
    for (std::size_t i = 0; i < v.size(); ++i) e.add(g.basis[i], CoeffPoly(v[i]));
    out.push_back(std::move(e));
  }
  return out;
}

Rational cocycle(int n, int m) {
  LaurentSeries vn = LaurentSeries::monomial(CoeffPoly(-1L), n + 1);
  LaurentSeries vm = LaurentSeries::monomial(CoeffPoly(-1L), m + 1);
  LaurentSeries d3 = vn.derivative().derivative().derivative();
  return (d3 * vm).residue().constant_value();
}

}  // namespace slecft::verma
