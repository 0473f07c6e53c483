#pragma once

#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "slecft/symbolic/coeff_poly.hpp"
#include "slecft/symbolic/partition.hpp"

namespace slecft::spectral {

using Complex = std::complex<double>;

class PoleProximity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// sin(pi a)/(pi a) * pi x / sin(pi x), a = 1 - kappa/4, x = sqrt(a^2 + lambda kappa).
// Throws PoleProximity when |sin(pi x)| < pole_threshold.
Complex reflection_R(Complex lambda, double kappa, double pole_threshold = 1e-13);
// 1 / R, entire in lambda; used for root finding.
Complex inverse_R(Complex lambda, double kappa);
// Smallest real pole of R, by bracketed root finding on 1/R.
double smallest_real_pole(double kappa);

// 1/12 + pi^2/(12 L^2) - pi^2/(2 L^2) sum_{n>=1} csch^2(n pi^2 / L), L = |log q|, 0 < q <= 0.99.
double U_of_q(double q);

// 1 / (pi |z - w|^2) for z != w on the unit circle.
double poisson_disc(Complex z, Complex w);
// pi/(4 L^2) sum_{n in Z} csch^2(pi (theta' - theta + 2 pi n) / (2 L)).
double poisson_annulus(double q, double theta, double theta_p);

// psi(z) = (z - alpha)/(1 - alpha z) taking the circle |z - x0| = r to |w| = q.
struct AnnulusMap {
  double alpha = 0;
  double q = 0;
  double x0 = 0;
  double r = 0;

  Complex psi(Complex z) const;
  Complex dpsi(Complex z) const;
  Complex schwarzian(Complex z) const;
};

AnnulusMap mobius_annulus(double x0, double r);

// 1/6 e^{2i theta} S psi + e^{2i theta} psi'^2/psi^2 U(q) at z = e^{i theta}.
double bubble_mass(const AnnulusMap& map, double theta);
// pi (H_D - |psi'(z)||psi'(w)| H_Aq(arg psi z, arg psi w)) at the pair
// z, w = e^{i (theta -+ dtheta/2)}, centred on theta so the error is O(dtheta^2).
double bubble_limit_estimate(const AnnulusMap& map, double theta, double dtheta);

struct SpectralQuery {
  Complex lambda;
  double kappa = 0;
  sym::Partition k, kp, kt, ktp;
};

// Evaluates a polynomial in lambda and c numerically.
Complex evaluate(const sym::CoeffPoly& p, Complex lambda, double cc);

// R(lambda) B(k, k') B(kt, kt'); zero across levels.
Complex spectral_rhs(const SpectralQuery& query);

struct GramInverseReport {
  bool singular = false;
  bool identity = false;
  std::string witness;
};
// Exact B B^{-1} = I at lambda and c(kappa).
GramInverseReport gram_inverse_check(int N, const sym::Rational& lambda, const sym::Rational& kappa);

// CSV: "q,U" rows.
void write_u_grid_csv(std::ostream& out, const std::vector<double>& qs);
// CSV: "dtheta,limit_error" rows for the annulus kernel limit at q.
void write_limit_csv(std::ostream& out, double q, const std::vector<double>& dthetas);

}  // namespace slecft::spectral
