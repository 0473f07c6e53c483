#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace slecft::loewner {

using Complex = std::complex<double>;

// Samples W_0..W_K on a uniform grid of step dt. Sampled and functional
// drivers start at 0; constant drivers may sit anywhere.
class DrivingFunction {
 public:
  DrivingFunction(double dt, std::vector<double> samples);

  static DrivingFunction constant(double value, double T, double dt);
  // W(t) = f(t) - f(0) sampled on the grid.
  static DrivingFunction from_function(const std::function<double(double)>& f, double T, double dt);

  double dt() const { return dt_; }
  double T() const { return dt_ * static_cast<double>(w_.size() - 1); }
  std::size_t steps() const { return w_.size() - 1; }
  const std::vector<double>& samples() const { return w_; }
  // Linear interpolation; clamped to [0, T].
  double at(double t) const;
  // s -> W(first_step dt + s). Values are not re-centred.
  DrivingFunction tail(std::size_t first_step) const;

 private:
  DrivingFunction() = default;
  double dt_ = 0;
  std::vector<double> w_;
};

class Swallowed : public std::runtime_error {
 public:
  Swallowed(const std::string& what, double time) : std::runtime_error(what), time_(time) {}
  double time() const { return time_; }

 private:
  double time_;
};

struct ForwardResult {
  Complex value;
  bool tip = false;  // z lies on the hull tip at time T (within grid resolution)
  std::size_t rk_steps = 0;
};

// g_T(z) for dg/dt = 2/(g - W_t), g_0 = z. RK4 on the driver grid, with the
// step cut to 0.1 |g - W|^2 near the singularity. Throws Swallowed when z
// is absorbed before T; a point absorbed at T (within the detection window)
// returns W_T with tip = true.
ForwardResult forward(const DrivingFunction& w, Complex z, double T);
Complex forward_map(const DrivingFunction& w, Complex z, double T);

struct Trace {
  double dt = 0;
  std::vector<Complex> points;  // points[k] = tip at time k dt
  std::string quality;
};

// Zipper reconstruction with vertical-slit elementary maps.
Trace trace(const DrivingFunction& w);

// W_{t+dt} = W_t + sqrt(kappa dt) xi with xi from mt19937_64 + Box-Muller.
DrivingFunction sample_sle_driving(double kappa, double T, double dt, std::uint64_t seed);

void write_trace_csv(std::ostream& out, const Trace& t);
void write_driving_csv(std::ostream& out, const DrivingFunction& w);

}  // namespace slecft::loewner
