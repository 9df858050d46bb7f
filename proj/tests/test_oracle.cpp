#include <doctest.h>

#include <cmath>
#include <numbers>

#include "xformlab/errors.hpp"
#include "xformlab/oracle.hpp"

using namespace xformlab;

TEST_CASE("integrate_adaptive examples") {
  QuadratureConfig cfg;
  auto one = [](double) { return Complex{1.0, 0.0}; };
  CHECK(integrate_adaptive(one, 0.0, 1.0, cfg).real() == 1.0);
  auto e = [](double t) { return Complex{std::exp(-t), 0.0}; };
  CHECK(std::abs(integrate_adaptive(e, 0.0, 1.0, cfg) - Complex{1.0 - std::exp(-1.0), 0.0}) < 1e-12);
  auto odd = [](double t) { return Complex{t, 0.0}; };
  CHECK(std::abs(integrate_adaptive(odd, -1.0, 1.0, cfg)) <= cfg.abs_tol);
}

TEST_CASE("integrate_adaptive handles complex oscillatory integrands") {
  QuadratureConfig cfg;
  auto g = [](double t) { return std::exp(Complex{0.0, -40.0 * t}); };
  // ∫₀^π e^{-40it} dt = (1 - e^{-40iπ})/(40i) = 0
  CHECK(std::abs(integrate_adaptive(g, 0.0, std::numbers::pi, cfg, std::numbers::pi / 40)) < 1e-10);
}

TEST_CASE("integrate_adaptive reports unmet tolerance") {
  QuadratureConfig cfg;
  cfg.max_depth = 10;
  cfg.rel_tol = 1e-15;
  cfg.abs_tol = 1e-300;
  auto g = [](double t) { return Complex{1.0 / std::sqrt(t), 0.0}; };
  CHECK_THROWS_AS(integrate_adaptive(g, 0.0, 1.0, cfg), ToleranceNotMet);
}

TEST_CASE("quadrature config validation") {
  QuadratureConfig cfg;
  cfg.max_depth = 5;
  CHECK_THROWS(cfg.validate());
  cfg = {};
  cfg.rel_tol = 0;
  CHECK_THROWS(cfg.validate());
}

TEST_CASE("laplace_numeric examples") {
  CHECK(std::abs(laplace_numeric(unit_step(), {2.0, 0.0}) - 0.5) < 1e-8);
  CHECK(std::abs(laplace_numeric(causal(0, -1), {1.0, 0.0}) - 0.5) < 1e-8);
  CHECK_THROWS_AS(laplace_numeric(causal(0, 2), {1.0, 0.0}), DivergentTransform);
  // t e^{-2t} at s = 0
  CHECK(std::abs(laplace_numeric(causal(1, -2), {0.0, 0.0}) - 0.25) < 1e-8);
}

TEST_CASE("fourier_numeric examples") {
  CHECK(std::abs(fourier_numeric(two_sided(0, -1), 0.0) - 2.0) < 1e-8);
  CHECK(std::abs(fourier_numeric(two_sided(0, -1), 1.0) - 1.0) < 1e-8);
  CHECK(std::abs(fourier_numeric(causal(0, -1), 0.0) - 1.0) < 1e-8);
  CHECK_THROWS_AS(fourier_numeric(unit_step(), 0.0), NotAbsolutelyIntegrable);
}

TEST_CASE("fourier oracle is conjugate symmetric for real signals") {
  SignalExpr f = causal(1, -1, {OscKind::Cos, 2}) + two_sided(0, Rational{-1, 2}, {OscKind::Sin, 1});
  for (int k = 0; k < 20; ++k) {
    const double w = -9.5 + k;
    CHECK(std::abs(fourier_numeric(f, -w) - std::conj(fourier_numeric(f, w))) < 1e-8);
  }
}

TEST_CASE("laplace oracle is linear") {
  SignalExpr f = causal(2, -1);
  SignalExpr g = causal(0, Rational{-1, 2}, {OscKind::Sin, 3});
  GaussianRational a{Rational{3, 2}, Rational{-1}};
  GaussianRational b{Rational{-2}};
  for (Complex s : {Complex{0.5, 0.0}, Complex{1.0, 3.0}, Complex{2.0, -7.0}}) {
    Complex lhs = laplace_numeric(scale(a, f) + scale(b, g), s);
    Complex rhs = a.to_complex() * laplace_numeric(f, s) + b.to_complex() * laplace_numeric(g, s);
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }
}

TEST_CASE("truncations b, 2b, 4b form a Cauchy sequence") {
  SignalExpr f = causal(1, Rational{-1, 4}, {OscKind::Cos, 2});
  const Complex s{0.5, 1.0};
  QuadratureConfig cfg;
  const double b = laplace_truncation(exp_order_cert(f), s.real(), cfg.abs_tol);
  Complex prev;
  for (int k = 0; k < 3; ++k) {
    cfg.truncation_b = b * std::pow(2.0, k);
    Complex v = laplace_numeric(f, s, cfg);
    if (k > 0) CHECK(std::abs(v - prev) <= 2 * cfg.abs_tol);
    prev = v;
  }
}

TEST_CASE("integrate_adaptive stops at the rounding floor under cancellation") {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-15;
  cfg.abs_tol = 1e-300;
  // ∫₀¹ 1e8·cos(2πt) dt = 0, so neither the relative nor the absolute target can be met
  auto g = [](double t) { return Complex{1e8 * std::cos(2.0 * std::numbers::pi * t), 0.0}; };
  const Complex v = integrate_adaptive(g, 0.0, 1.0, cfg);
  const double mass = 2e8 / std::numbers::pi;
  CHECK(std::abs(v) <= 50.0 * std::numeric_limits<double>::epsilon() * mass);
}
