#include "slecft/symbolic/laurent_series.hpp"

#include <algorithm>

namespace slecft::sym {

namespace {

int add_order(int o, int shift) {
  if (o >= LaurentSeries::kExact) return LaurentSeries::kExact;
  return o + shift;
}

}  // namespace

LaurentSeries::LaurentSeries(int valuation, std::vector<CoeffPoly> coeffs, int order)
    : valuation_(valuation), coeffs_(std::move(coeffs)), order_(order) {
  normalize();
}

LaurentSeries LaurentSeries::monomial(const CoeffPoly& c, int exponent, int order) {
  if (exponent >= order) return zero(order);
  return LaurentSeries(exponent, {c}, order);
}

LaurentSeries LaurentSeries::zero(int order) { return LaurentSeries(order >= kExact ? 0 : order, {}, order); }

void LaurentSeries::normalize() {
  if (!exact() && valuation_ + stored() > order_) coeffs_.resize(static_cast<std::size_t>(std::max(0, order_ - valuation_)));
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    valuation_ += static_cast<int>(lead);
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) valuation_ = exact() ? 0 : order_;
}

CoeffPoly LaurentSeries::coefficient(int k) const {
  if (k >= order_)
    throw OrderExhausted("coefficient z^" + std::to_string(k) + " requested beyond order " + std::to_string(order_));
  if (k < valuation_ || k >= valuation_ + stored()) return {};
  return coeffs_[static_cast<std::size_t>(k - valuation_)];
}

LaurentSeries LaurentSeries::truncated(int order) const {
  if (order > order_) throw OrderExhausted("cannot extend order by truncation");
  std::vector<CoeffPoly> c;
  for (int k = valuation_; k < std::min(order, valuation_ + stored()); ++k) c.push_back(coefficient(k));
  return LaurentSeries(valuation_, std::move(c), order);
}

LaurentSeries LaurentSeries::shifted(int k) const {
  LaurentSeries r = *this;
  r.valuation_ += k;
  r.order_ = add_order(order_, k);
  return r;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  int order = std::min(order_, o.order_);
  if (is_zero() && o.is_zero()) return zero(order);
  int lo = std::min(is_zero() ? o.valuation_ : valuation_, o.is_zero() ? valuation_ : o.valuation_);
  int hi = std::max(valuation_ + stored(), o.valuation_ + o.stored());
  hi = std::min(hi, order);
  std::vector<CoeffPoly> c;
  for (int k = lo; k < hi; ++k) {
    CoeffPoly x = (k >= valuation_ && k < valuation_ + stored()) ? coeffs_[static_cast<std::size_t>(k - valuation_)] : CoeffPoly();
    if (k >= o.valuation_ && k < o.valuation_ + o.stored()) x += o.coeffs_[static_cast<std::size_t>(k - o.valuation_)];
    c.push_back(std::move(x));
  }
  return LaurentSeries(lo, std::move(c), order);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const CoeffPoly& s) const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = c * s;
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  // Zero series still carry an order: O(z^order) times something of valuation v.
  int order = std::min(add_order(order_, o.valuation_), add_order(o.order_, valuation_));
  if (is_zero() || o.is_zero()) return zero(order);
  int v = valuation_ + o.valuation_;
  int hi = valuation_ + stored() + o.valuation_ + o.stored() - 1;
  hi = std::min(hi, order);
  std::vector<CoeffPoly> c;
  c.reserve(static_cast<std::size_t>(std::max(0, hi - v)));
  for (int k = v; k < hi; ++k) {
    PolyAccumulator acc;
    for (int i = 0; i < stored(); ++i) {
      int j = k - v - i;
      if (j < 0) break;
      if (j >= o.stored()) continue;
      acc.add_product(coeffs_[static_cast<std::size_t>(i)], o.coeffs_[static_cast<std::size_t>(j)]);
    }
    c.push_back(acc.finish());
  }
  return LaurentSeries(v, std::move(c), order);
}

LaurentSeries LaurentSeries::pow(long e) const {
  if (is_zero()) {
    if (e <= 0) throw std::domain_error("non-positive power of the zero series");
    return zero(order_);
  }
  const CoeffPoly& lead = coeffs_.front();
  if (e == 0) return monomial(CoeffPoly(1L), 0, exact() ? kExact : order_ - valuation_);
  if (e > 0 && exact()) {
    LaurentSeries r = monomial(CoeffPoly(1L), 0), base = *this;
    long n = e;
    while (n) {
      if (n & 1) r = r * base;
      n >>= 1;
      if (n) base = base * base;
    }
    return r;
  }
  if (exact() && stored() == 1 && lead.is_constant()) {
    Rational c = lead.constant_value(), ce = 1;
    Rational base = e >= 0 ? c : Rational(1 / c);
    for (long k = 0; k < (e >= 0 ? e : -e); ++k) ce *= base;
    return monomial(CoeffPoly(ce), static_cast<int>(valuation_ * e));
  }
  if (!lead.is_constant())
    throw std::domain_error("series power needs a rational leading coefficient: " + lead.to_string());
  Rational c = lead.constant_value();
  // this = c z^v (1 + h) with relative precision rel.
  int rel = exact() ? kExact : order_ - valuation_;
  if (rel >= kExact) {
    // Negative power of an exact series: there is no natural truncation.
    throw OrderExhausted("negative power of an exact series needs an explicit truncation");
  }
  std::vector<CoeffPoly> u(static_cast<std::size_t>(rel));
  Rational cinv = 1 / c;
  for (int k = 0; k < rel && k < stored(); ++k) u[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)] * cinv;
  // (1 + h)^e by v_k = (1/k) sum_{j=1}^{k} ((e+1) j - k) u_j v_{k-j}.
  std::vector<CoeffPoly> w(static_cast<std::size_t>(rel));
  w[0] = CoeffPoly(1L);
  for (int k = 1; k < rel; ++k) {
    PolyAccumulator acc;
    for (int j = 1; j <= k; ++j) {
      const auto& uj = u[static_cast<std::size_t>(j)];
      if (uj.is_zero()) continue;
      Rational f = make_rational((e + 1) * j - k, k);
      if (f == 0) continue;
      acc.add_product(uj, w[static_cast<std::size_t>(k - j)], f);
    }
    w[static_cast<std::size_t>(k)] = acc.finish();
  }
  Rational ce = 1;
  Rational base = e >= 0 ? c : cinv;
  for (long k = 0; k < (e >= 0 ? e : -e); ++k) ce *= base;
  for (auto& x : w) x = x * ce;
  long newv = static_cast<long>(valuation_) * e;
  if (newv > kExact / 2 || newv < -kExact / 2) throw std::overflow_error("series power exponent overflow");
  return LaurentSeries(static_cast<int>(newv), std::move(w), static_cast<int>(newv) + rel);
}

LaurentSeries LaurentSeries::inverse() const { return pow(-1); }

LaurentSeries LaurentSeries::operator/(const LaurentSeries& o) const { return *this * o.inverse(); }

LaurentSeries LaurentSeries::derivative() const {
  std::vector<CoeffPoly> c;
  for (int k = 0; k < stored(); ++k) c.push_back(coeffs_[static_cast<std::size_t>(k)] * Rational(valuation_ + k));
  return LaurentSeries(valuation_ - 1, std::move(c), add_order(order_, -1));
}

LaurentSeries LaurentSeries::mirrored() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = c.mirrored();
  return r;
}

LaurentSeries LaurentSeries::compose(const LaurentSeries& inner) const {
  if (!is_zero() && valuation_ < 0) throw std::domain_error("compose: outer series has a pole");
  if (inner.is_zero() || inner.valuation_ < 1) throw std::domain_error("compose: inner series must vanish at 0");
  int order = inner.order_;
  if (!exact()) {
    long o = static_cast<long>(order_) * inner.valuation_;
    order = static_cast<int>(std::min<long>(order, o));
  }
  if (order >= kExact) {
    // Exact polynomial composition.
    LaurentSeries r = zero();
    for (int k = valuation_ + stored() - 1; k >= 0; --k) {
      r = r * inner + monomial(coefficient(k), 0);
    }
    return r;
  }
  LaurentSeries g = inner.exact() ? inner.truncated(order) : inner.truncated(std::min(order, inner.order_));
  LaurentSeries r = zero(order);
  int top = std::min(valuation_ + stored(), exact() ? order : order_) - 1;
  for (int k = top; k >= 0; --k) {
    r = (r * g).truncated(order) + monomial(coefficient(k), 0, order);
  }
  return r;
}

LaurentSeries LaurentSeries::reversion() const {
  if (is_zero() || valuation_ != 1) throw std::domain_error("reversion needs f = c z + O(z^2)");
  if (!coeffs_.front().is_constant()) throw std::domain_error("reversion needs a rational leading coefficient");
  if (exact()) {
    if (stored() == 1) return monomial(CoeffPoly(Rational(1 / coeffs_.front().constant_value())), 1);
    throw OrderExhausted("reversion of an exact series needs an explicit truncation");
  }
  // Lagrange: [z^k] g = (1/k) [w^{k-1}] u(w)^{-k}, where f = z u.
  LaurentSeries u = shifted(-1);
  std::vector<CoeffPoly> g(static_cast<std::size_t>(order_ - 1));
  for (int k = 1; k < order_; ++k) {
    LaurentSeries uk = u.pow(-k);
    g[static_cast<std::size_t>(k - 1)] = uk.coefficient(k - 1) * Rational(1, k);
  }
  return LaurentSeries(1, std::move(g), order_);
}

LaurentSeries LaurentSeries::pre_schwarzian() const {
  LaurentSeries d1 = derivative();
  return d1.derivative() / d1;
}

LaurentSeries LaurentSeries::schwarzian() const {
  if (!exact() && order_ - valuation_ < 3) throw OrderExhausted("schwarzian needs at least 3 reliable coefficients");
  LaurentSeries a = pre_schwarzian();
  return a.derivative() - (a * a) * CoeffPoly(Rational(1, 2));
}

CoeffPoly LaurentSeries::residue() const { return coefficient(-1); }

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
  int order = std::min(order_, o.order_);
  int lo = std::min(valuation_, o.valuation_);
  int hi = std::min(order, std::max(valuation_ + stored(), o.valuation_ + o.stored()));
  for (int k = lo; k < hi; ++k)
    if (!(coefficient(k) == o.coefficient(k))) return false;
  return true;
}

std::string LaurentSeries::to_string() const {
  std::string s;
  for (int k = 0; k < stored(); ++k) {
    if (coeffs_[static_cast<std::size_t>(k)].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[static_cast<std::size_t>(k)].to_string() + ")*z^" + std::to_string(valuation_ + k);
  }
  if (s.empty()) s = "0";
  if (!exact()) s += " + O(z^" + std::to_string(order_) + ")";
  return s;
}

}  // namespace slecft::sym
