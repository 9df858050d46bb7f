#pragma once

#include <functional>

#include "xformlab/existence.hpp"
#include "xformlab/quadrature.hpp"
#include "xformlab/signal_expr.hpp"

namespace xformlab {

/// Truncation point b with M·e^{-(Re s - a)·b}/(Re s - a) <= abs_tol/10.
double laplace_truncation(const ExpOrderCert& cert, double re_s, double abs_tol);

/// Truncation point for a decaying half-line: M·e^{-rate·b}/rate <= abs_tol/10.
double decay_truncation(const DecayCert& decay, double abs_tol);

/// Largest angular frequency present in the signal's oscillating factors.
double max_signal_frequency(const SignalExpr& f);

/// ∫₀^b f(t)e^{-st} dt with b from the exponential-order certificate (or
/// cfg.truncation_b). Throws DivergentTransform when laplace_exists fails.
Complex laplace_numeric(const SignalExpr& f, Complex s, const QuadratureConfig& cfg = {});

/// ∫ f(t)e^{-iωt} dt, split at 0 with each half truncated from its decay
/// certificate. Throws NotAbsolutelyIntegrable when fourier_exists fails.
Complex fourier_numeric(const SignalExpr& f, double w, const QuadratureConfig& cfg = {});

/// Same integral for an arbitrary integrand bounded by the given half-line
/// decay certificates; `signal_freq` is its largest oscillation frequency.
Complex fourier_numeric(const std::function<Complex(double)>& f, const DecayCert& positive, const DecayCert& negative,
                        double signal_freq, double w, const QuadratureConfig& cfg = {});

}  // namespace xformlab
