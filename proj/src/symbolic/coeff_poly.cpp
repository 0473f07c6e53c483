#include "slecft/symbolic/coeff_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace slecft::sym {

// ---------------------------------------------------------------- Generator

Generator Generator::a(std::uint32_t m) {
  if (m == 0 || m > 0xFFFFFFu) throw std::invalid_argument("coordinate index must be >= 1");
  return Generator(GenKind::A, m);
}

Generator Generator::abar(std::uint32_t m) {
  if (m == 0 || m > 0xFFFFFFu) throw std::invalid_argument("coordinate index must be >= 1");
  return Generator(GenKind::ABAR, m);
}

Generator Generator::from_key(std::uint32_t key) {
  auto kind = key >> 24;
  auto idx = key & 0xFFFFFFu;
  switch (kind) {
    case 0: return a(idx);
    case 1: return abar(idx);
    case 2: return lambda();
    case 3: return cc();
    default: throw std::invalid_argument("bad generator key");
  }
}

Generator Generator::parse(std::string_view name) {
  if (name == "lambda") return lambda();
  if (name == "c") return cc();
  auto parse_index = [&](std::string_view digits) -> std::uint32_t {
    if (digits.empty()) throw std::invalid_argument("bad generator: " + std::string(name));
    std::uint32_t v = 0;
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("bad generator: " + std::string(name));
      v = v * 10 + static_cast<std::uint32_t>(ch - '0');
    }
    return v;
  };
  if (name.starts_with("abar")) return abar(parse_index(name.substr(4)));
  if (name.starts_with("a")) return a(parse_index(name.substr(1)));
  throw std::invalid_argument("bad generator: " + std::string(name));
}

Generator Generator::mirrored() const { return from_key(mirror_key(key_)); }

std::string Generator::name() const {
  switch (kind()) {
    case GenKind::A: return "a" + std::to_string(index());
    case GenKind::ABAR: return "abar" + std::to_string(index());
    case GenKind::LAMBDA: return "lambda";
    case GenKind::CC: return "c";
  }
  return "?";
}

// ----------------------------------------------------------------- Monomial

Monomial::Monomial(Generator g, std::uint32_t exp) {
  if (exp > 0) vars_.push_back({g.key(), exp});
  degree_ = exp;
}

Monomial Monomial::from_powers(std::vector<std::pair<Generator, std::uint32_t>> powers) {
  Monomial m;
  for (auto& [g, e] : powers) m = m * Monomial(g, e);
  return m;
}

void Monomial::recompute_degree() {
  degree_ = 0;
  for (auto& v : vars_) degree_ += v.exp;
}

std::uint32_t Monomial::exponent(Generator g) const {
  for (auto& v : vars_)
    if (v.key == g.key()) return v.exp;
  return 0;
}

long Monomial::left_degree() const {
  long d = 0;
  for (auto& v : vars_)
    if ((v.key >> 24) == 0) d += static_cast<long>(v.key & 0xFFFFFFu) * v.exp;
  return d;
}

long Monomial::right_degree() const {
  long d = 0;
  for (auto& v : vars_)
    if ((v.key >> 24) == 1) d += static_cast<long>(v.key & 0xFFFFFFu) * v.exp;
  return d;
}

std::uint32_t Monomial::max_coordinate_index() const {
  std::uint32_t m = 0;
  for (auto& v : vars_)
    if ((v.key >> 24) <= 1) m = std::max(m, v.key & 0xFFFFFFu);
  return m;
}

bool Monomial::has_non_coordinate() const {
  return !vars_.empty() && (vars_.back().key >> 24) >= 2;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.vars_.reserve(vars_.size() + o.vars_.size());
  auto i = vars_.begin(), j = o.vars_.begin();
  while (i != vars_.end() && j != o.vars_.end()) {
    if (i->key < j->key) {
      r.vars_.push_back(*i++);
    } else if (j->key < i->key) {
      r.vars_.push_back(*j++);
    } else {
      r.vars_.push_back({i->key, i->exp + j->exp});
      ++i;
      ++j;
    }
  }
  r.vars_.insert(r.vars_.end(), i, vars_.end());
  r.vars_.insert(r.vars_.end(), j, o.vars_.end());
  r.degree_ = degree_ + o.degree_;
  return r;
}

std::pair<std::uint32_t, Monomial> Monomial::divide_by(Generator g) const {
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    if (vars_[k].key != g.key()) continue;
    Monomial r = *this;
    std::uint32_t e = vars_[k].exp;
    if (e == 1)
      r.vars_.erase(r.vars_.begin() + static_cast<long>(k));
    else
      r.vars_[k].exp = e - 1;
    r.degree_ = degree_ - 1;
    return {e, r};
  }
  return {0, Monomial()};
}

Monomial Monomial::without(Generator g) const {
  Monomial r;
  for (auto& v : vars_)
    if (v.key != g.key()) r.vars_.push_back(v);
  r.recompute_degree();
  return r;
}

Monomial Monomial::mirrored() const {
  Monomial r;
  for (auto& v : vars_) r.vars_.push_back({mirror_key(v.key), v.exp});
  std::sort(r.vars_.begin(), r.vars_.end(), [](const VarPower& x, const VarPower& y) { return x.key < y.key; });
  r.degree_ = degree_;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto& v : vars_) {
    std::uint64_t x = (static_cast<std::uint64_t>(v.key) << 20) ^ v.exp;
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Monomial::to_string() const {
  if (vars_.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    if (k) s += '*';
    s += Generator::from_key(vars_[k].key).name();
    if (vars_[k].exp != 1) s += "^" + std::to_string(vars_[k].exp);
  }
  return s;
}

bool canonical_before(const Monomial& x, const Monomial& y) {
  if (x.degree() != y.degree()) return x.degree() > y.degree();
  const auto& a = x.powers();
  const auto& b = y.powers();
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k].key != b[k].key) return a[k].key < b[k].key;
    if (a[k].exp != b[k].exp) return a[k].exp > b[k].exp;
  }
  return a.size() > b.size();
}

// ---------------------------------------------------------------- CoeffPoly

namespace {

bool term_before(const Term& x, const Term& y) { return canonical_before(x.mono, y.mono); }

}  // namespace

CoeffPoly::CoeffPoly(const Rational& constant) {
  if (constant != 0) terms_.push_back({Monomial(), constant});
}

CoeffPoly CoeffPoly::gen(Generator g, std::uint32_t exp) { return monomial(Monomial(g, exp)); }

CoeffPoly CoeffPoly::monomial(const Monomial& m, const Rational& coef) {
  CoeffPoly p;
  if (coef != 0) p.terms_.push_back({m, coef});
  return p;
}

CoeffPoly CoeffPoly::from_terms(std::vector<Term> terms) {
  PolyAccumulator acc;
  for (auto& t : terms) acc.add(t.mono, t.coef);
  return acc.finish();
}

bool CoeffPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational CoeffPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

Rational CoeffPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("polynomial is not constant: " + to_string());
  return constant_term();
}

Rational CoeffPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return canonical_before(t.mono, x); });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return 0;
}

CoeffPoly CoeffPoly::operator+(const CoeffPoly& o) const {
  CoeffPoly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin(), j = o.terms_.begin();
  while (i != terms_.end() && j != o.terms_.end()) {
    if (canonical_before(i->mono, j->mono)) {
      r.terms_.push_back(*i++);
    } else if (canonical_before(j->mono, i->mono)) {
      r.terms_.push_back(*j++);
    } else {
      Rational s = i->coef + j->coef;
      if (s != 0) r.terms_.push_back({i->mono, s});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), i, terms_.end());
  r.terms_.insert(r.terms_.end(), j, o.terms_.end());
  return r;
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

CoeffPoly CoeffPoly::operator-(const CoeffPoly& o) const { return *this + (-o); }

CoeffPoly CoeffPoly::operator*(const Rational& s) const {
  if (s == 0) return {};
  CoeffPoly r = *this;
  for (auto& t : r.terms_) t.coef *= s;
  return r;
}

CoeffPoly operator*(const Rational& s, const CoeffPoly& p) { return p * s; }

CoeffPoly CoeffPoly::operator*(const CoeffPoly& o) const {
  if (terms_.empty() || o.terms_.empty()) return {};
  if (is_constant()) return o * terms_[0].coef;
  if (o.is_constant()) return *this * o.terms_[0].coef;
  PolyAccumulator acc;
  acc.add_product(*this, o);
  return acc.finish();
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) { return *this = *this + o; }
CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) { return *this = *this - o; }
CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& o) { return *this = *this * o; }

CoeffPoly CoeffPoly::pow(unsigned e) const {
  CoeffPoly result(1L), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool CoeffPoly::operator==(const CoeffPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (!(terms_[k].mono == o.terms_[k].mono) || terms_[k].coef != o.terms_[k].coef) return false;
  return true;
}

CoeffPoly CoeffPoly::derivative(Generator g) const {
  std::vector<Term> out;
  for (auto& t : terms_) {
    auto [e, rest] = t.mono.divide_by(g);
    if (e) out.push_back({rest, t.coef * e});
  }
  // Division by a common variable preserves a monomial order.
  CoeffPoly r;
  r.terms_ = std::move(out);
  return r;
}

CoeffPoly CoeffPoly::substitute(const std::map<Generator, Rational>& assignment) const {
  if (assignment.empty()) return *this;
  PolyAccumulator acc;
  for (auto& t : terms_) {
    Rational c = t.coef;
    Monomial rest;
    for (auto& v : t.mono.powers()) {
      auto it = assignment.find(Generator::from_key(v.key));
      if (it == assignment.end()) {
        rest = rest * Monomial(Generator::from_key(v.key), v.exp);
      } else {
        Rational p;
        mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), v.exp);
        mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), v.exp);
        c *= p;
      }
    }
    acc.add(rest, c);
  }
  return acc.finish();
}

CoeffPoly CoeffPoly::substitute_poly(Generator g, const CoeffPoly& value) const {
  PolyAccumulator acc;
  std::map<std::uint32_t, CoeffPoly> powers;
  for (auto& t : terms_) {
    auto e = t.mono.exponent(g);
    if (e == 0) {
      acc.add(t.mono, t.coef);
      continue;
    }
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
    acc.add_times_monomial(it->second, t.mono.without(g), t.coef);
  }
  return acc.finish();
}

CoeffPoly CoeffPoly::coefficient_of(Generator g, std::uint32_t e) const {
  PolyAccumulator acc;
  for (auto& t : terms_)
    if (t.mono.exponent(g) == e) acc.add(t.mono.without(g), t.coef);
  return acc.finish();
}

std::uint32_t CoeffPoly::degree_in(Generator g) const {
  std::uint32_t d = 0;
  for (auto& t : terms_) d = std::max(d, t.mono.exponent(g));
  return d;
}

CoeffPoly CoeffPoly::mirrored() const {
  CoeffPoly r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.mono.mirrored(), t.coef});
  std::sort(r.terms_.begin(), r.terms_.end(), term_before);
  return r;
}

std::uint32_t CoeffPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

std::uint32_t CoeffPoly::max_coordinate_index() const {
  std::uint32_t m = 0;
  for (auto& t : terms_) m = std::max(m, t.mono.max_coordinate_index());
  return m;
}

bool CoeffPoly::depends_on_non_coordinates() const {
  for (auto& t : terms_)
    if (t.mono.has_non_coordinate()) return true;
  return false;
}

std::vector<Generator> CoeffPoly::variables() const {
  std::vector<std::uint32_t> keys;
  for (auto& t : terms_)
    for (auto& v : t.mono.powers()) keys.push_back(v.key);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<Generator> out;
  for (auto k : keys) out.push_back(Generator::from_key(k));
  return out;
}

std::string CoeffPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) s += " + ";
    s += to_canonical(terms_[k].coef);
    if (!terms_[k].mono.is_one()) s += "*" + terms_[k].mono.to_string();
  }
  return s;
}

CoeffPoly CoeffPoly::parse(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text == "0") return {};
  PolyAccumulator acc;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(" + ", pos);
    std::string_view term = trim(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos));
    if (term.empty()) throw std::invalid_argument("empty term in polynomial text");
    std::vector<std::string_view> factors;
    std::size_t fp = 0;
    while (true) {
      auto star = term.find('*', fp);
      factors.push_back(term.substr(fp, star == std::string_view::npos ? term.npos : star - fp));
      if (star == std::string_view::npos) break;
      fp = star + 1;
    }
    Rational coef = parse_rational(factors[0]);
    Monomial m;
    for (std::size_t k = 1; k < factors.size(); ++k) {
      auto f = factors[k];
      auto caret = f.find('^');
      std::uint32_t e = 1;
      if (caret != std::string_view::npos) {
        Rational er = parse_rational(f.substr(caret + 1));
        if (!is_integer(er) || er <= 0) throw std::invalid_argument("bad exponent in polynomial text");
        e = static_cast<std::uint32_t>(er.get_num().get_ui());
        f = f.substr(0, caret);
      }
      m = m * Monomial(Generator::parse(f), e);
    }
    acc.add(m, coef);
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  return acc.finish();
}

Bidegree bidegree(const CoeffPoly& p, bool strict) {
  if (strict && p.depends_on_non_coordinates())
    throw std::invalid_argument("bidegree: polynomial depends on lambda or c");
  Bidegree b{0, 0};
  for (auto& t : p.terms()) {
    b.left = std::max(b.left, t.mono.left_degree());
    b.right = std::max(b.right, t.mono.right_degree());
  }
  return b;
}

// --------------------------------------------------------- PolyAccumulator

void PolyAccumulator::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolyAccumulator::add(const CoeffPoly& p) {
  for (auto& t : p.terms()) add(t.mono, t.coef);
}

void PolyAccumulator::add_scaled(const CoeffPoly& p, const Rational& s) {
  if (s == 0) return;
  for (auto& t : p.terms()) add(t.mono, t.coef * s);
}

void PolyAccumulator::add_product(const CoeffPoly& p, const CoeffPoly& q, const Rational& s) {
  if (s == 0) return;
  Rational tmp;
  for (auto& x : p.terms()) {
    for (auto& y : q.terms()) {
      tmp = x.coef * y.coef;
      if (s != 1) tmp *= s;
      add(x.mono * y.mono, tmp);
    }
  }
}

void PolyAccumulator::add_times_monomial(const CoeffPoly& p, const Monomial& m, const Rational& s) {
  if (s == 0) return;
  for (auto& x : p.terms()) add(x.mono * m, x.coef * s);
}

CoeffPoly PolyAccumulator::finish() {
  std::vector<Term> terms;
  terms.reserve(acc_.size());
  for (auto& [m, c] : acc_)
    if (c != 0) terms.push_back({m, c});
  acc_.clear();
  std::sort(terms.begin(), terms.end(), term_before);
  CoeffPoly r;
  r.terms_ = std::move(terms);
  return r;
}

Rational central_charge(const Rational& kappa) {
  if (kappa <= 0) throw std::domain_error("kappa must be positive");
  return Rational(13) - Rational(24) / kappa - Rational(3, 2) * kappa;
}

}  // namespace slecft::sym
