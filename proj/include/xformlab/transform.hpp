#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xformlab/rational_expr.hpp"
#include "xformlab/signal_expr.hpp"

namespace xformlab {

/// A symbolic transform together with its exact pole set and the hypotheses
/// the rule consumed.
struct TransformResult {
  RationalExpr expr;
  /// Distinct poles of `expr` (in s, or in the (iω) monomial).
  std::vector<GaussianRational> poles;
  /// Laplace only: Re s > roc is the region of convergence; nullopt means −∞.
  std::optional<Rational> roc;
  std::vector<std::string> conditions;

  bool is_laplace() const noexcept { return expr.var() == Var::S; }
};

/// f^{(k)}(0⁺) for k = 0..order-1, exact.
struct InitialValues {
  std::vector<GaussianRational> values;

  std::vector<Complex> as_complex() const;
};

InitialValues initial_values(const SignalExpr& f, unsigned order);

// --- Laplace ---------------------------------------------------------------

/// L[t^n e^{ct}] = n!/(s-c)^{n+1} summed over the Euler-decomposed terms.
/// Throws NonCausalInput.
TransformResult laplace_symbolic(const SignalExpr& f);

/// L[f](s - s0), i.e. the transform of e^{s0·t}·f.
TransformResult laplace_shift(const SignalExpr& f, const GaussianRational& s0);

/// s^n·F(s) - Σ_{k=1..n} s^{k-1}·f^{(n-k)}(0⁺), the transform of the n-th derivative.
TransformResult laplace_derivative(const SignalExpr& f, unsigned n);

/// F(s)/s, the transform of t ↦ ∫₀ᵗ f.
TransformResult laplace_integral(const SignalExpr& f);

// --- Fourier ---------------------------------------------------------------

/// Throws NotAbsolutelyIntegrable when fourier_exists fails.
TransformResult fourier_symbolic(const SignalExpr& f);

/// F(ω - w0), the transform of e^{i·w0·t}·f.
TransformResult fourier_shift(const SignalExpr& f, const Rational& w0);

/// Transform of cos(w0·t)·f (kind Cos) or sin(w0·t)·f (kind Sin).
TransformResult fourier_modulate(const SignalExpr& f, const Rational& w0, OscKind kind);

/// F(-ω), the transform of f(-t).
TransformResult fourier_time_reverse(const SignalExpr& f);

/// (iω)^n·F(ω). Rejects signals whose derivatives below order n jump at t = 0
/// (NonDifferentiable), since the jump would add a constant term.
TransformResult fourier_derivative(const SignalExpr& f, unsigned n);

/// Fourier transform of a causal, absolutely integrable f obtained by
/// substituting s = iω into its Laplace transform; cross-checked against
/// fourier_symbolic.
TransformResult laplace_to_fourier(const SignalExpr& f);

}  // namespace xformlab
