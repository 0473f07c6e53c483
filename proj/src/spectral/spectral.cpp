#include "slecft/spectral/spectral.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "slecft/symbolic/linalg.hpp"
#include "slecft/verma/verma.hpp"

namespace slecft::spectral {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(pi x)/(pi x), with the series near 0.
Complex sinc_pi(Complex x) {
  Complex px = kPi * x;
  if (std::abs(x) < 1e-4) {
    Complex p2 = px * px;
    return 1.0 - p2 / 6.0 + p2 * p2 / 120.0;
  }
  return std::sin(px) / px;
}

double csch2(double x) {
  double s = std::sinh(x);
  return 1.0 / (s * s);
}

void require_q(double q) {
  if (!(q > 0.0 && q <= 0.99)) {
    std::ostringstream os;
    os << "q must lie in (0, 0.99], got " << q;
    throw std::domain_error(os.str());
  }
}

}  // namespace

Complex reflection_R(Complex lambda, double kappa, double pole_threshold) {
  const double a = 1.0 - kappa / 4.0;
  Complex x = std::sqrt(Complex(a * a) + lambda * kappa);
  if (std::abs(x) >= 1e-4 && std::abs(std::sin(kPi * x)) < pole_threshold) {
    std::ostringstream os;
    os << "R(lambda) is at a pole: lambda = " << lambda << ", kappa = " << kappa;
    throw PoleProximity(os.str());
  }
  return sinc_pi(Complex(a)) / sinc_pi(x);
}

Complex inverse_R(Complex lambda, double kappa) {
  const double a = 1.0 - kappa / 4.0;
  Complex x = std::sqrt(Complex(a * a) + lambda * kappa);
  return sinc_pi(x) / sinc_pi(Complex(a));
}

double smallest_real_pole(double kappa) {
  if (!(kappa > 0)) throw std::domain_error("kappa must be positive");
  const double a = 1.0 - kappa / 4.0;
  // For real lambda, x is real or purely imaginary; 1/R has no zero for x
  // imaginary or x in [0, 1), and changes sign once on (1/2, 3/2).
  auto lam_of_x = [&](double x) { return (x * x - a * a) / kappa; };
  auto f = [&](double lam) { return inverse_R(Complex(lam), kappa).real(); };
  std::uintmax_t iters = 200;
  auto [lo, hi] = boost::math::tools::toms748_solve(f, lam_of_x(0.5), lam_of_x(1.5),
                                                     boost::math::tools::eps_tolerance<double>(52), iters);
  return 0.5 * (lo + hi);
}

double U_of_q(double q) {
  require_q(q);
  const double L = std::abs(std::log(q));
  const double step = kPi * kPi / L;
  double sum = 0;
  for (int n = 1;; ++n) {
    double term = csch2(n * step);
    sum += term;
    if (term < 1e-18 * sum || term == 0.0) break;
  }
  const double L2 = L * L;
  return 1.0 / 12.0 + kPi * kPi / (12.0 * L2) - kPi * kPi / (2.0 * L2) * sum;
}

double poisson_disc(Complex z, Complex w) {
  double d = std::abs(z - w);
  if (d == 0.0) throw std::invalid_argument("poisson_disc: coincident points");
  return 1.0 / (kPi * d * d);
}

double poisson_annulus(double q, double theta, double theta_p) {
  if (!(q > 0.0 && q < 0.99 + 1e-15)) throw std::domain_error("poisson_annulus: q must lie in (0, 0.99)");
  const double L = std::abs(std::log(q));
  // Reduce the angle difference to (-pi, pi].
  double d = std::remainder(theta_p - theta, 2 * kPi);
  if (d == 0.0) throw std::invalid_argument("poisson_annulus: coincident points");
  const double scale = kPi / (2 * L);
  double sum = csch2(scale * d);
  // Images decay like 4 exp(-2 scale |d + 2 pi n|); stop once both tails are below 1e-15 relative.
  for (int n = 1;; ++n) {
    double t1 = csch2(scale * (d + 2 * kPi * n));
    double t2 = csch2(scale * (d - 2 * kPi * n));
    sum += t1 + t2;
    // remaining tail bounded by a geometric series with ratio exp(-4 pi scale)
    double ratio = std::exp(-4 * kPi * scale);
    double tail = (t1 + t2) * ratio / (1 - ratio);
    if (tail < 1e-15 * sum) break;
  }
  return kPi / (4 * L * L) * sum;
}

// ------------------------------------------------------------------ annulus

Complex AnnulusMap::psi(Complex z) const { return (z - alpha) / (1.0 - alpha * z); }

Complex AnnulusMap::dpsi(Complex z) const {
  Complex d = 1.0 - alpha * z;
  return (1.0 - alpha * alpha) / (d * d);
}

Complex AnnulusMap::schwarzian(Complex z) const {
  Complex d = 1.0 - alpha * z;
  Complex p1 = (1.0 - alpha * alpha) / (d * d);
  Complex p2 = 2.0 * alpha * (1.0 - alpha * alpha) / (d * d * d);
  Complex p3 = 6.0 * alpha * alpha * (1.0 - alpha * alpha) / (d * d * d * d);
  Complex r = p2 / p1;
  return p3 / p1 - 1.5 * r * r;
}

AnnulusMap mobius_annulus(double x0, double r) {
  if (!(r > 0) || !(std::abs(x0) + r < 1)) {
    std::ostringstream os;
    os << "disc (x0=" << x0 << ", r=" << r << ") is not compactly inside the unit disc";
    throw std::domain_error(os.str());
  }
  AnnulusMap m;
  m.x0 = x0;
  m.r = r;
  const double a = x0 - r;
  const double b = x0 + r;
  const double s = a + b;
  if (s == 0.0) {
    m.alpha = 0;
  } else {
    const double p = 1 + a * b;
    // Root of s alpha^2 - 2 p alpha + s = 0 with |alpha| < 1, written to avoid cancellation.
    m.alpha = s / (p + std::sqrt(p * p - s * s));
  }
  m.q = std::abs(m.psi(Complex(b)));
  return m;
}

double bubble_mass(const AnnulusMap& map, double theta) {
  Complex z = std::polar(1.0, theta);
  Complex e2 = z * z;
  Complex ratio = map.dpsi(z) / map.psi(z);
  Complex total = e2 * map.schwarzian(z) / 6.0 + e2 * ratio * ratio * U_of_q(map.q);
  if (std::abs(total.imag()) >= 1e-10) {
    std::ostringstream os;
    os << "bubble_mass: imaginary part " << total.imag() << " exceeds 1e-10";
    throw std::logic_error(os.str());
  }
  return total.real();
}

double bubble_limit_estimate(const AnnulusMap& map, double theta, double dtheta) {
  Complex z = std::polar(1.0, theta - dtheta / 2);
  Complex w = std::polar(1.0, theta + dtheta / 2);
  double hd = poisson_disc(z, w);
  double ha = std::abs(map.dpsi(z)) * std::abs(map.dpsi(w)) *
              poisson_annulus(map.q, std::arg(map.psi(z)), std::arg(map.psi(w)));
  return kPi * (hd - ha);
}

// ----------------------------------------------------------------- spectral

Complex evaluate(const sym::CoeffPoly& p, Complex lambda, double cc) {
  Complex total = 0;
  for (auto& t : p.terms()) {
    Complex v = sym::to_double(t.coef);
    for (auto& vp : t.mono.powers()) {
      auto g = sym::Generator::from_key(vp.key);
      Complex base;
      if (g.kind() == sym::GenKind::LAMBDA)
        base = lambda;
      else if (g.kind() == sym::GenKind::CC)
        base = cc;
      else
        throw std::invalid_argument("evaluate: coordinate variable " + g.name() + " in a weight polynomial");
      v *= std::pow(base, static_cast<int>(vp.exp));
    }
    total += v;
  }
  return total;
}

Complex spectral_rhs(const SpectralQuery& query) {
  if (query.k.weight() != query.kp.weight() || query.kt.weight() != query.ktp.weight()) return 0.0;
  Complex R = reflection_R(query.lambda, query.kappa);
  // central charge 13 - 3 kappa/2 - 24/kappa
  const double k = query.kappa;
  const double cc = (-3 * k * k + 26 * k - 48) / (2 * k);
  auto entry = [&](const sym::Partition& a, const sym::Partition& b) {
    verma::GramMatrix g = verma::gram(static_cast<int>(a.weight()));
    for (std::size_t i = 0; i < g.basis.size(); ++i)
      if (g.basis[i] == a)
        for (std::size_t j = 0; j < g.basis.size(); ++j)
          if (g.basis[j] == b) return evaluate(g.entries[i][j], query.lambda, cc);
    throw std::logic_error("spectral_rhs: partition missing from Gram basis");
  };
  return R * entry(query.k, query.kp) * entry(query.kt, query.ktp);
}

GramInverseReport gram_inverse_check(int N, const sym::Rational& lambda, const sym::Rational& kappa) {
  if (N < 0) throw std::invalid_argument("gram_inverse_check: N must be >= 0");
  GramInverseReport rep;
  verma::GramMatrix g = verma::gram(N, verma::Weights::specialized(lambda, sym::central_charge(kappa)));
  sym::RationalMatrix B = sym::specialize(g.entries, {});
  auto inv = sym::inverse(B);
  if (!inv) {
    rep.singular = true;
    rep.witness = "Gram matrix at level " + std::to_string(N) + " is singular at lambda=" + sym::to_canonical(lambda) +
                  ", kappa=" + sym::to_canonical(kappa);
    return rep;
  }
  rep.identity = sym::multiply(B, *inv) == sym::identity(B.size());
  rep.witness = rep.identity ? "B B^-1 = I (" + std::to_string(B.size()) + "x" + std::to_string(B.size()) + ")"
                             : "B B^-1 differs from the identity";
  return rep;
}

void write_u_grid_csv(std::ostream& out, const std::vector<double>& qs) {
  out << "q,U\n" << std::setprecision(17);
  for (double q : qs) out << q << ',' << U_of_q(q) << '\n';
}

void write_limit_csv(std::ostream& out, double q, const std::vector<double>& dthetas) {
  out << "dtheta,limit_error\n" << std::setprecision(17);
  const double u = U_of_q(q);
  for (double d : dthetas) {
    double est = kPi * (poisson_disc(1.0, std::polar(1.0, d)) - poisson_annulus(q, 0.0, d));
    out << d << ',' << std::abs(est - u) / std::abs(u) << '\n';
  }
}

}  // namespace slecft::spectral
