#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "generators.hpp"
#include "slecft/loewner/loewner.hpp"

using namespace slecft::loewner;
using slecft::testgen::Gen;

namespace {

Complex sqrt_upper(Complex w) {
  Complex s = std::sqrt(w);
  return s.imag() < 0 ? -s : s;
}

// Smooth random driver: a few sine modes, starting at 0.
DrivingFunction smooth_driver(Gen& g, double T, double dt) {
  double a1 = g.real(-1, 1), a2 = g.real(-1, 1), f1 = g.real(0.5, 3), f2 = g.real(0.5, 3);
  return DrivingFunction::from_function([=](double t) { return a1 * std::sin(f1 * t) + a2 * std::sin(f2 * t + 1); }, T, dt);
}

std::optional<Complex> try_map(const DrivingFunction& w, Complex z, double T) {
  try {
    return forward_map(w, z, T);
  } catch (const Swallowed&) {
    return std::nullopt;
  }
}

}  // namespace

TEST(DrivingFunction, Construction) {
  auto w = DrivingFunction::from_function([](double t) { return 3 + t; }, 1.0, 0.25);
  EXPECT_EQ(w.steps(), 4u);
  EXPECT_DOUBLE_EQ(w.T(), 1.0);
  EXPECT_EQ(w.samples().front(), 0.0);
  EXPECT_DOUBLE_EQ(w.at(0.375), 0.375);
  EXPECT_DOUBLE_EQ(w.at(-1), 0.0);
  EXPECT_DOUBLE_EQ(w.at(5), 1.0);
  auto tail = w.tail(2);
  EXPECT_EQ(tail.steps(), 2u);
  EXPECT_DOUBLE_EQ(tail.samples().front(), 0.5);
  EXPECT_THROW(w.tail(5), std::out_of_range);
  EXPECT_THROW(DrivingFunction(0.0, {0.0}), std::invalid_argument);
  EXPECT_THROW(DrivingFunction(0.1, {}), std::invalid_argument);
  EXPECT_THROW(DrivingFunction(0.1, {0.0, NAN}), std::invalid_argument);
  EXPECT_EQ(DrivingFunction::constant(2.0, 1.0, 0.1).samples().back(), 2.0);
}

TEST(Forward, ZeroDriverClosedForm) {
  auto w = DrivingFunction::constant(0.0, 1.0, 1e-4);
  EXPECT_LT(std::abs(forward_map(w, Complex(0, 3), 1.0) - sqrt_upper(Complex(-9 + 4, 0))), 1e-6);
  Gen g(91);
  for (int i = 0; i < 50; ++i) {
    Complex z(g.real(-3, 3), g.real(0.5, 3));
    double t = g.real(0, 1);
    t = std::round(t / 1e-4) * 1e-4;
    EXPECT_LT(std::abs(forward_map(w, z, t) - sqrt_upper(z * z + 4 * t)), 1e-6) << z << " " << t;
  }
  EXPECT_EQ(forward_map(w, Complex(1, 1), 0.0), Complex(1, 1));
}

TEST(Forward, ConstantDriverClosedForm) {
  auto w = DrivingFunction::constant(0.7, 1.0, 1e-3);
  Complex z(0.2, 1.5);
  EXPECT_LT(std::abs(forward_map(w, z, 1.0) - (0.7 + sqrt_upper((z - 0.7) * (z - 0.7) + 4.0))), 1e-6);
}

TEST(Forward, Errors) {
  auto w = DrivingFunction::constant(0.0, 1.0, 1e-3);
  EXPECT_THROW(forward_map(w, Complex(1, 0), 0.5), std::invalid_argument);
  EXPECT_THROW(forward_map(w, Complex(1, 1), 2.0), std::invalid_argument);
  EXPECT_THROW(forward_map(w, Complex(1, 1), -0.1), std::invalid_argument);
}

TEST(Forward, SwallowedPointsAndTip) {
  auto w = DrivingFunction::constant(0.0, 1.0, 1e-4);
  // the slit reaches height 0.5 at t = 1/16
  try {
    forward(w, Complex(0, 0.5), 1.0);
    FAIL() << "expected Swallowed";
  } catch (const Swallowed& e) {
    EXPECT_NEAR(e.time(), 1.0 / 16, 2e-3);
  }
  ForwardResult tip = forward(w, Complex(0, 2), 1.0);
  EXPECT_TRUE(tip.tip);
  EXPECT_LT(std::abs(tip.value), 1e-9);
  ForwardResult off = forward(w, Complex(0.3, 2), 1.0);
  EXPECT_FALSE(off.tip);
  EXPECT_GT(off.rk_steps, 0u);
}

// g^{W+c}(z + c) = g^W(z) + c
TEST(LoewnerProperty, TranslationCovariance) {
  Gen g(92);
  for (int i = 0; i < 15; ++i) {
    auto w = smooth_driver(g, 0.5, 1e-3);
    double c = g.real(-2, 2);
    std::vector<double> shifted = w.samples();
    for (double& v : shifted) v += c;
    DrivingFunction ws(w.dt(), shifted);
    Complex z(g.real(-2, 2), g.real(0.3, 2));
    auto lhs = try_map(ws, z + c, 0.5), rhs = try_map(w, z, 0.5);
    ASSERT_EQ(lhs.has_value(), rhs.has_value()) << z;
    if (lhs) EXPECT_LT(std::abs(*lhs - (*rhs + c)), 1e-10);
  }
}

// W~(t) = r W(t / r^2) gives g~_{r^2 t}(r z) = r g_t(z)
TEST(LoewnerProperty, BrownianScaling) {
  Gen g(93);
  for (int i = 0; i < 15; ++i) {
    auto w = smooth_driver(g, 0.5, 1e-3);
    double r = g.real(0.5, 2);
    std::vector<double> scaled = w.samples();
    for (double& v : scaled) v *= r;
    DrivingFunction ws(w.dt() * r * r, scaled);
    Complex z(g.real(-2, 2), g.real(0.3, 2));
    auto lhs = try_map(ws, r * z, 0.5 * r * r), rhs = try_map(w, z, 0.5);
    ASSERT_EQ(lhs.has_value(), rhs.has_value()) << z;
    if (lhs) EXPECT_LT(std::abs(*lhs - r * *rhs), 1e-9 * std::abs(*rhs));
  }
}

// g_T = g^{tail}_{T - s} o g_s
TEST(LoewnerProperty, Concatenation) {
  Gen g(94);
  for (int i = 0; i < 15; ++i) {
    auto w = smooth_driver(g, 1.0, 1e-3);
    std::size_t k = static_cast<std::size_t>(g.integer(1, 999));
    double s = static_cast<double>(k) * w.dt();
    Complex z(g.real(-2, 2), g.real(1.6, 3));
    Complex mid = forward_map(w, z, s);
    Complex two_step = forward_map(w.tail(k), mid, 1.0 - s);
    EXPECT_LT(std::abs(two_step - forward_map(w, z, 1.0)), 1e-8);
  }
}

// g_t(z) = z + 2t/z + o(1/z)
TEST(LoewnerProperty, CapacityNormalization) {
  Gen g(95);
  for (int i = 0; i < 10; ++i) {
    auto w = smooth_driver(g, 1.0, 1e-3);
    double t = 0.5 + 0.5 * g.real(0, 1);
    t = std::round(t / 1e-3) * 1e-3;
    Complex z(g.real(-1, 1) * 1e4, 1e4);
    Complex gz = forward_map(w, z, t);
    EXPECT_NEAR(std::abs(z * (gz - z) - 2 * t), 0.0, 1e-3);
    EXPECT_GT(gz.imag(), 0.0);
    EXPECT_LT(gz.imag(), z.imag());
  }
}

TEST(Trace, VerticalSlit) {
  auto w = DrivingFunction::constant(0.0, 1.0, 1e-4);
  Trace tr = trace(w);
  ASSERT_EQ(tr.points.size(), w.steps() + 1);
  EXPECT_EQ(tr.points.front(), Complex(0, 0));
  EXPECT_LT(std::abs(tr.points.back() - Complex(0, 2)), 1e-3);
  for (std::size_t k = 0; k < tr.points.size(); k += 997)
    EXPECT_LT(std::abs(tr.points[k] - Complex(0, 2 * std::sqrt(k * 1e-4))), 1e-3) << k;
  EXPECT_FALSE(tr.quality.empty());
}

// W(t) = c sqrt(t), c = 2(1 - 2a)/sqrt(a(1 - a)), traces the ray at angle a pi.
TEST(Trace, SelfSimilarRay) {
  const double a = 1.0 / 3, c = 2 * (1 - 2 * a) / std::sqrt(a * (1 - a));
  auto w = DrivingFunction::from_function([c](double t) { return c * std::sqrt(t); }, 1.0, 2e-4);
  Trace tr = trace(w);
  for (std::size_t k : {1000u, 2500u, 5000u}) {
    Complex p = tr.points[k];
    EXPECT_NEAR(std::arg(p), a * std::numbers::pi, 2e-2) << k;
  }
  // |gamma(t)| scales like sqrt(t)
  EXPECT_NEAR(std::abs(tr.points[5000]) / std::abs(tr.points[1250]), 2.0, 2e-2);
}

TEST(TraceProperty, StaysInClosedUpperHalfPlane) {
  Gen g(96);
  for (int i = 0; i < 5; ++i) {
    auto w = sample_sle_driving(g.real(0.5, 4), 0.5, 1e-3, static_cast<std::uint64_t>(g.integer(1, 1 << 30)));
    Trace tr = trace(w);
    EXPECT_EQ(tr.points.front(), Complex(0, 0));
    for (auto& p : tr.points) {
      EXPECT_GE(p.imag(), 0.0);
      EXPECT_TRUE(std::isfinite(p.real()) && std::isfinite(p.imag()));
    }
  }
}

TEST(SleDriving, DeterministicPerSeed) {
  auto a = sample_sle_driving(3.0, 1.0, 0.01, 7), b = sample_sle_driving(3.0, 1.0, 0.01, 7);
  auto c = sample_sle_driving(3.0, 1.0, 0.01, 8);
  EXPECT_EQ(a.samples(), b.samples());
  EXPECT_NE(a.samples(), c.samples());
  EXPECT_EQ(a.samples().front(), 0.0);
  EXPECT_EQ(a.steps(), 100u);
  EXPECT_THROW(sample_sle_driving(4.5, 1.0, 0.01, 1), std::invalid_argument);
  EXPECT_THROW(sample_sle_driving(0.0, 1.0, 0.01, 1), std::invalid_argument);
}

TEST(SleDriving, IncrementsAreGaussianWithVarianceKappaDt) {
  const double kappa = 2.5, dt = 1e-3;
  auto w = sample_sle_driving(kappa, 100.0, dt, 12345);
  const auto& s = w.samples();
  double sum = 0, sum2 = 0, sum4 = 0;
  const std::size_t n = s.size() - 1;
  for (std::size_t k = 1; k <= n; ++k) {
    double x = (s[k] - s[k - 1]) / std::sqrt(kappa * dt);
    sum += x;
    sum2 += x * x;
    sum4 += x * x * x * x;
  }
  double mean = sum / n, var = sum2 / n - mean * mean, kurt = sum4 / n;
  EXPECT_LT(std::abs(mean), 4 / std::sqrt(double(n)));
  EXPECT_LT(std::abs(var - 1), 4 * std::sqrt(2.0 / n));
  EXPECT_LT(std::abs(kurt - 3), 4 * std::sqrt(96.0 / n));
}

TEST(LoewnerCsv, Shapes) {
  auto w = DrivingFunction::constant(0.0, 0.02, 0.01);
  std::ostringstream a, b;
  write_trace_csv(a, trace(w));
  write_driving_csv(b, w);
  std::string as = a.str(), bs = b.str();
  EXPECT_EQ(as.substr(0, as.find('\n')), "t,re,im");
  EXPECT_EQ(bs.substr(0, bs.find('\n')), "t,W");
  EXPECT_EQ(std::count(as.begin(), as.end(), '\n'), 4);
  EXPECT_EQ(std::count(bs.begin(), bs.end(), '\n'), 4);
}
