#include "slecft/loewner/loewner.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

namespace slecft::loewner {

DrivingFunction::DrivingFunction(double dt, std::vector<double> samples) : dt_(dt), w_(std::move(samples)) {
  if (!(dt > 0)) throw std::invalid_argument("driving function: dt must be positive");
  if (w_.empty()) throw std::invalid_argument("driving function: no samples");
  for (double v : w_)
    if (!std::isfinite(v)) throw std::invalid_argument("driving function: non-finite sample");
}

DrivingFunction DrivingFunction::constant(double value, double T, double dt) {
  if (!(T >= 0)) throw std::invalid_argument("driving function: T must be >= 0");
  auto K = static_cast<std::size_t>(std::llround(T / dt));
  return DrivingFunction(dt, std::vector<double>(K + 1, value));
}

DrivingFunction DrivingFunction::from_function(const std::function<double(double)>& f, double T, double dt) {
  if (!(T >= 0)) throw std::invalid_argument("driving function: T must be >= 0");
  auto K = static_cast<std::size_t>(std::llround(T / dt));
  std::vector<double> w(K + 1);
  const double f0 = f(0.0);
  for (std::size_t k = 0; k <= K; ++k) w[k] = f(static_cast<double>(k) * dt) - f0;
  return DrivingFunction(dt, std::move(w));
}

double DrivingFunction::at(double t) const {
  if (t <= 0) return w_.front();
  double x = t / dt_;
  auto k = static_cast<std::size_t>(x);
  if (k >= w_.size() - 1) return w_.back();
  double frac = x - static_cast<double>(k);
  return w_[k] + frac * (w_[k + 1] - w_[k]);
}

DrivingFunction DrivingFunction::tail(std::size_t first_step) const {
  if (first_step > steps()) throw std::out_of_range("driving function: tail beyond the last sample");
  DrivingFunction d;
  d.dt_ = dt_;
  d.w_.assign(w_.begin() + static_cast<std::ptrdiff_t>(first_step), w_.end());
  return d;
}

ForwardResult forward(const DrivingFunction& w, Complex z, double T) {
  const double dt = w.dt();
  if (!(T >= 0) || T > w.T() + 1e-9 * dt) throw std::invalid_argument("forward_map: T outside the driver's range");
  if (!(z.imag() > 0)) throw std::invalid_argument("forward_map: z must lie in the upper half-plane");
  ForwardResult res{z};
  if (T == 0) return res;

  const double threshold = 10 * std::sqrt(dt);
  const double window = 25 * dt;  // time for a vertical approach to close a gap of size threshold
  auto rhs = [&](double t, Complex g) { return 2.0 / (g - w.at(t)); };

  double t = 0;
  Complex g = z;
  bool survives = false;
  while (t < T) {
    double d = std::abs(g - w.at(t));
    if (d < threshold && !survives) {
      double tau = t + d * d / 4;
      if (tau < T - window) {
        std::ostringstream os;
        os << "point " << z << " is swallowed at t ~ " << tau;
        throw Swallowed(os.str(), tau);
      }
      if (tau <= T) {
        res.value = w.at(T);
        res.tip = true;
        return res;
      }
      survives = true;
    }
    double next_grid = (std::floor(t / dt + 1e-9) + 1) * dt;
    double h = std::min({next_grid - t, T - t, 0.1 * d * d});
    if (h <= 1e-300) break;
    Complex k1 = rhs(t, g);
    Complex k2 = rhs(t + h / 2, g + h / 2 * k1);
    Complex k3 = rhs(t + h / 2, g + h / 2 * k2);
    Complex k4 = rhs(t + h, g + h * k3);
    g += h / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = (T - t - h <= 1e-12 * dt) ? T : t + h;
    ++res.rk_steps;
  }
  res.value = g;
  return res;
}

Complex forward_map(const DrivingFunction& w, Complex z, double T) { return forward(w, z, T).value; }

Trace trace(const DrivingFunction& w) {
  Trace tr;
  tr.dt = w.dt();
  const auto& W = w.samples();
  const std::size_t K = w.steps();
  const double c = 2 * std::sqrt(w.dt());
  tr.points.reserve(K + 1);
  tr.points.emplace_back(W[0], 0.0);
  for (std::size_t k = 1; k <= K; ++k) {
    Complex z = W[k];
    for (std::size_t j = k; j >= 1; --j) {
      Complex u = z - W[j];
      z = W[j] + std::sqrt(u - c) * std::sqrt(u + c);
      if (z.imag() < 0) z.imag(0);
    }
    tr.points.push_back(z);
  }
  double worst = 0;
  for (std::size_t k = 1; k <= K; ++k) worst = std::max(worst, std::abs(W[k] - W[k - 1]));
  std::ostringstream os;
  os << "zipper, vertical slits, dt=" << w.dt() << ", max |dW|/sqrt(dt)=" << worst / std::sqrt(w.dt());
  tr.quality = os.str();
  return tr;
}

DrivingFunction sample_sle_driving(double kappa, double T, double dt, std::uint64_t seed) {
  if (!(kappa > 0 && kappa <= 4)) throw std::invalid_argument("sample_sle_driving: kappa must lie in (0, 4]");
  if (!(dt > 0) || !(T >= 0)) throw std::invalid_argument("sample_sle_driving: need dt > 0 and T >= 0");
  std::mt19937_64 rng(seed);
  // 53-bit uniforms in (0, 1]; Box-Muller, using both outputs of each pair.
  auto uniform = [&] { return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53; };
  bool have_spare = false;
  double spare = 0;
  auto normal = [&] {
    if (have_spare) {
      have_spare = false;
      return spare;
    }
    double r = std::sqrt(-2 * std::log(uniform()));
    double a = 2 * std::numbers::pi * uniform();
    spare = r * std::sin(a);
    have_spare = true;
    return r * std::cos(a);
  };
  auto K = static_cast<std::size_t>(std::llround(T / dt));
  std::vector<double> w(K + 1, 0.0);
  const double s = std::sqrt(kappa * dt);
  for (std::size_t k = 1; k <= K; ++k) w[k] = w[k - 1] + s * normal();
  return DrivingFunction(dt, std::move(w));
}

void write_trace_csv(std::ostream& out, const Trace& t) {
  out << "t,re,im\n" << std::setprecision(17);
  for (std::size_t k = 0; k < t.points.size(); ++k)
    out << static_cast<double>(k) * t.dt << ',' << t.points[k].real() << ',' << t.points[k].imag() << '\n';
}

void write_driving_csv(std::ostream& out, const DrivingFunction& w) {
  out << "t,W\n" << std::setprecision(17);
  for (std::size_t k = 0; k < w.samples().size(); ++k) out << static_cast<double>(k) * w.dt() << ',' << w.samples()[k] << '\n';
}

}  // namespace slecft::loewner
