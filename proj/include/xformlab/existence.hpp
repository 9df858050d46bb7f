#pragma once

#include <optional>
#include <string>

#include "xformlab/signal_expr.hpp"

namespace xformlab {

/// Polynomial-absorption margin used by exp_order_cert.
inline constexpr double kGrowthMargin = 1.0 / 16.0;

/// Witnesses (M, a) of |f(t)| <= M·e^{a·t} on t >= 0, with M > 0.
struct ExpOrderCert {
  double M = 1.0;
  double a = 0.0;
};

enum class VerdictKind { LaplaceExists, FourierExists, Fails };

struct ExistenceVerdict {
  VerdictKind kind = VerdictKind::Fails;
  ExpOrderCert cert;  ///< meaningful for LaplaceExists
  std::string reason;  ///< set for Fails

  bool holds() const noexcept { return kind != VerdictKind::Fails; }
};

/// Structural exponential-order certificate. Every atom τ^n e^{cτ}·osc gets
/// a = Re(c) + 1/16 and M = max(1, (n/(e/16))^n); Scale multiplies M by |coeff|,
/// Sum takes the largest a and adds the M's.
ExpOrderCert exp_order_cert(const SignalExpr& f);

/// Laplace existence at s. Throws NonCausalInput for signals with support on t < 0.
ExistenceVerdict laplace_exists(const SignalExpr& f, Complex s);

/// Absolute integrability checked separately on [0,∞) and (-∞,0].
ExistenceVerdict fourier_exists(const SignalExpr& f);

/// The same predicate checked as a single whole-line condition.
ExistenceVerdict fourier_exists_whole_line(const SignalExpr& f);

enum class HalfLine { Positive, Negative };

/// Bound |f(t)| <= M·e^{-rate·|t|} on one half-line. `empty` when f vanishes there.
struct DecayCert {
  double M = 0.0;
  double rate = 0.0;
  bool empty = true;
};

/// Throws NotAbsolutelyIntegrable when some atom on that side does not decay.
DecayCert half_line_decay(const SignalExpr& f, HalfLine side);

/// Sampling check of a claimed bound on `samples` log-spaced points of
/// [0, t_max] (plus t = 0). Returns the first violating t, if any. Sampling
/// can only falsify a bound, never prove it.
std::optional<double> falsify_exp_order(const SignalExpr& f, const ExpOrderCert& cert, double t_max = 100.0,
                                        int samples = 500, double rel_slack = 1e-12);

}  // namespace xformlab
