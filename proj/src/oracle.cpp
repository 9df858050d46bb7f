#include "xformlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace xformlab {

namespace {

/// Half-period panel width; frequencies up to 4 share the width π/4.
double panel_width(double freq) { return std::numbers::pi / std::max(freq, 4.0); }

}  // namespace

double laplace_truncation(const ExpOrderCert& cert, double re_s, double abs_tol) {
  const double gap = re_s - cert.a;
  const double b = std::log(10.0 * cert.M / (abs_tol * gap)) / gap;
  return std::max(b, 1.0);
}

double decay_truncation(const DecayCert& decay, double abs_tol) {
  const double b = std::log(10.0 * decay.M / (abs_tol * decay.rate)) / decay.rate;
  return std::max(b, 1.0);
}

double max_signal_frequency(const SignalExpr& f) {
  double freq = 0.0;
  for (const auto& t : normalize_terms(f)) {
    freq = std::max(freq, std::abs(t.atom.rate.im().get_d()) + std::abs(t.atom.osc.freq.get_d()));
  }
  return freq;
}

Complex laplace_numeric(const SignalExpr& f, Complex s, const QuadratureConfig& cfg) {
  cfg.validate();
  const ExistenceVerdict verdict = laplace_exists(f, s);
  if (!verdict.holds()) throw DivergentTransform("Laplace integral diverges: " + verdict.reason);
  const double b = cfg.truncation_b.value_or(laplace_truncation(verdict.cert, s.real(), cfg.abs_tol));
  const double freq = std::abs(s.imag()) + max_signal_frequency(f);
  const CompiledSignal g{f};
  auto integrand = [&g, s](double t) { return g(t, s); };
  return integrate_adaptive(integrand, 0.0, b, cfg, panel_width(freq));
}

Complex fourier_numeric(const std::function<Complex(double)>& f, const DecayCert& positive, const DecayCert& negative,
                        double signal_freq, double w, const QuadratureConfig& cfg) {
  cfg.validate();
  const double width = panel_width(std::abs(w) + signal_freq);
  Complex total{0.0, 0.0};
  if (!positive.empty) {
    const double b = cfg.truncation_b.value_or(decay_truncation(positive, cfg.abs_tol));
    auto integrand = [&f, w](double t) { return f(t) * std::exp(Complex{0.0, -w * t}); };
    total += integrate_adaptive(integrand, 0.0, b, cfg, width);
  }
  if (!negative.empty) {
    const double b = cfg.truncation_b.value_or(decay_truncation(negative, cfg.abs_tol));
    // ∫_{-b}^0 f(t)e^{-iωt} dt = ∫_0^b f(-u)e^{iωu} du
    auto integrand = [&f, w](double u) { return f(-u) * std::exp(Complex{0.0, w * u}); };
    total += integrate_adaptive(integrand, 0.0, b, cfg, width);
  }
  return total;
}

Complex fourier_numeric(const SignalExpr& f, double w, const QuadratureConfig& cfg) {
  const DecayCert positive = half_line_decay(f, HalfLine::Positive);
  const DecayCert negative = half_line_decay(f, HalfLine::Negative);
  const CompiledSignal g{f};
  return fourier_numeric([&g](double t) { return g(t); }, positive, negative, max_signal_frequency(f), w, cfg);
}

}  // namespace xformlab
