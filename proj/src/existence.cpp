#include "xformlab/existence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "xformlab/errors.hpp"
#include "xformlab/signal_syntax.hpp"

namespace xformlab {

namespace {

double modulus(const GaussianRational& z) { return std::sqrt(z.norm().get_d()); }

/// max(1, (n/(eps·e))^n): bounds τ^n·e^{-eps·τ} on τ >= 0.
double poly_absorption(unsigned n, double eps) {
  if (n == 0) return 1.0;
  return std::max(1.0, std::pow(static_cast<double>(n) / (eps * std::exp(1.0)), static_cast<double>(n)));
}

ExpOrderCert structural_cert(const SignalExpr& f) {
  return f.visit([](const auto& node) -> ExpOrderCert {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, Atom>) {
      return {poly_absorption(node.degree, kGrowthMargin), node.rate.re().get_d() + kGrowthMargin};
    } else if constexpr (std::is_same_v<T, ScaleNode>) {
      ExpOrderCert c = structural_cert(node.inner);
      c.M *= modulus(node.coeff);
      return c;
    } else if constexpr (std::is_same_v<T, SumNode>) {
      ExpOrderCert acc{0.0, -std::numeric_limits<double>::infinity()};
      for (const auto& term : node.terms) {
        const ExpOrderCert c = structural_cert(term);
        acc.M += c.M;
        acc.a = std::max(acc.a, c.a);
      }
      return acc;
    } else {
      // Atoms are bounded by the same envelope on both half-lines.
      return structural_cert(node.inner);
    }
  });
}

std::string describe(const Term& t) {
  SignalExpr e = make_atom(t.atom);
  if (t.reversed) e = reverse(std::move(e));
  return print_signal(e);
}

bool on_side(const Term& t, HalfLine side) {
  if (t.atom.support == Support::TwoSidedEven) return true;
  return side == HalfLine::Positive ? !t.reversed : t.reversed;
}

std::optional<std::string> side_failure(const std::vector<Term>& terms, HalfLine side) {
  for (const auto& t : terms) {
    if (on_side(t, side) && sgn(t.atom.rate.re()) >= 0) {
      return std::string{side == HalfLine::Positive ? "not absolutely integrable on [0,∞)"
                                                     : "not absolutely integrable on (-∞,0]"} +
             ": " + describe(t) + " does not decay";
    }
  }
  return std::nullopt;
}

}  // namespace

ExpOrderCert exp_order_cert(const SignalExpr& f) {
  ExpOrderCert c = structural_cert(f);
  // any M > 0 bounds the zero signal
  if (!(c.M > 0.0)) c.M = 1.0;
  return c;
}

ExistenceVerdict laplace_exists(const SignalExpr& f, Complex s) {
  if (!is_causal(f)) throw NonCausalInput("Laplace transform needs a causal signal (no support on t < 0)");
  const ExpOrderCert cert = exp_order_cert(f);
  if (s.real() > cert.a) return {VerdictKind::LaplaceExists, cert, {}};
  std::ostringstream os;
  os << "Re s <= a: Re s = " << s.real() << " does not exceed the growth rate a = " << cert.a;
  return {VerdictKind::Fails, cert, os.str()};
}

ExistenceVerdict fourier_exists(const SignalExpr& f) {
  const auto terms = normalize_terms(f);
  for (HalfLine side : {HalfLine::Positive, HalfLine::Negative}) {
    if (auto why = side_failure(terms, side)) return {VerdictKind::Fails, {}, *why};
  }
  return {VerdictKind::FourierExists, {}, {}};
}

ExistenceVerdict fourier_exists_whole_line(const SignalExpr& f) {
  for (const auto& t : normalize_terms(f)) {
    if (sgn(t.atom.rate.re()) >= 0) {
      return {VerdictKind::Fails, {}, "not absolutely integrable on the real line: " + describe(t) + " does not decay"};
    }
  }
  return {VerdictKind::FourierExists, {}, {}};
}

DecayCert half_line_decay(const SignalExpr& f, HalfLine side) {
  const auto terms = normalize_terms(f);
  if (auto why = side_failure(terms, side)) throw NotAbsolutelyIntegrable(*why);
  DecayCert out{0.0, std::numeric_limits<double>::infinity(), true};
  for (const auto& t : terms) {
    if (!on_side(t, side)) continue;
    const double r = -t.atom.rate.re().get_d();
    // give up half the decay rate to absorb the polynomial factor
    const double eps = t.atom.degree > 0 ? r / 2.0 : 0.0;
    out.M += modulus(t.coeff) * poly_absorption(t.atom.degree, eps);
    out.rate = std::min(out.rate, r - eps);
    out.empty = false;
  }
  if (out.empty) out.rate = 0.0;
  return out;
}

std::optional<double> falsify_exp_order(const SignalExpr& f, const ExpOrderCert& cert, double t_max, int samples,
                                        double rel_slack) {
  auto violates = [&](double t) {
    const double bound = cert.M * std::exp(cert.a * t);
    return std::abs(eval_signal(f, t)) > bound * (1.0 + rel_slack);
  };
  if (violates(0.0)) return 0.0;
  const double lo = std::log(1e-3);
  const double hi = std::log(t_max);
  for (int k = 0; k < samples; ++k) {
    const double t = std::exp(lo + (hi - lo) * k / std::max(1, samples - 1));
    if (violates(t)) return t;
  }
  return std::nullopt;
}

}  // namespace xformlab
