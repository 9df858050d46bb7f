#include "xformlab/validation.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "xformlab/case_studies.hpp"
#include "xformlab/existence.hpp"
#include "xformlab/oracle.hpp"
#include "xformlab/signal_syntax.hpp"
#include "xformlab/transform.hpp"

namespace xformlab {

namespace {

constexpr double kShadowTol = 1e-6;

std::string complex_text(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

Rational canonical(long p, long q) {
  Rational r{p, q};
  r.canonicalize();
  return r;
}

/// Shared bookkeeping for one suite run.
class Recorder {
 public:
  explicit Recorder(ValidationReport& report) : report_{report} {}

  /// Runs one case; any library exception becomes a failure.
  void run(const std::string& property, const std::string& inputs, const std::function<void()>& body) {
    ++report_.cases_run;
    ++report_.per_property[property];
    property_ = property;
    inputs_ = inputs;
    try {
      body();
    } catch (const std::exception& e) {
      fail("threw", e.what(), "", std::numeric_limits<double>::quiet_NaN());
    }
  }

  void exact(const RationalExpr& lhs, const RationalExpr& rhs) {
    if (!rational_equal(lhs, rhs)) fail("", to_string(lhs), to_string(rhs), std::numeric_limits<double>::quiet_NaN());
  }

  void numeric(Complex symbolic, Complex oracle, const std::string& where) {
    const double delta = std::abs(symbolic - oracle);
    if (!(delta <= kShadowTol * (1.0 + std::abs(symbolic)))) {
      fail("numeric at " + where, complex_text(symbolic), complex_text(oracle), delta);
    }
  }

 private:
  void fail(const std::string& what, std::string lhs, std::string rhs, double delta) {
    std::string property = property_;
    if (!what.empty()) property += " (" + what + ")";
    report_.failures.push_back({property, inputs_, std::move(lhs), std::move(rhs), delta});
  }

  ValidationReport& report_;
  std::string property_;
  std::string inputs_;
};

/// A Laplace sample point inside both the tight ROC and the certificate's half-plane.
Complex laplace_point(SignalSampler& sampler, const TransformResult& r, const SignalExpr& numeric_signal) {
  double lo = exp_order_cert(numeric_signal).a;
  if (r.roc) lo = std::max(lo, r.roc->get_d());
  return {lo + sampler.uniform_real(0.1, 2.0), sampler.uniform_real(-5.0, 5.0)};
}

void laplace_shadow(Recorder& rec, SignalSampler& sampler, const TransformResult& r, const SignalExpr& g,
                    const QuadratureConfig& cfg) {
  const Complex s = laplace_point(sampler, r, g);
  rec.numeric(eval_rational_exact(r.expr, s), laplace_numeric(g, s, cfg), "s = " + complex_text(s));
}

void fourier_shadow(Recorder& rec, SignalSampler& sampler, const TransformResult& r, const SignalExpr& g,
                    const QuadratureConfig& cfg) {
  const double w = sampler.uniform_real(-10.0, 10.0);
  std::ostringstream where;
  where.precision(17);
  where << "w = " << w;
  rec.numeric(eval_rational_exact(r.expr, {0.0, w}), fourier_numeric(g, w, cfg), where.str());
}

void table2_round(Recorder& rec, SignalSampler& sampler, const QuadratureConfig& cfg) {
  {
    const SignalExpr f = sampler.laplace_signal();
    const SignalExpr g = sampler.laplace_signal();
    const GaussianRational a = sampler.gaussian();
    const GaussianRational b = sampler.gaussian();
    const SignalExpr combo = scale(a, f) + scale(b, g);
    rec.run("linearity", "f = " + print_signal(f) + "; g = " + print_signal(g) + "; a = " + to_string(a) +
                             "; b = " + to_string(b),
            [&] {
              const TransformResult lhs = laplace_symbolic(combo);
              rec.exact(lhs.expr, a * laplace_symbolic(f).expr + b * laplace_symbolic(g).expr);
              laplace_shadow(rec, sampler, lhs, combo, cfg);
            });
  }
  {
    const SignalExpr f = sampler.laplace_signal();
    const GaussianRational s0 = sampler.gaussian();
    rec.run("frequency_shift", "f = " + print_signal(f) + "; s0 = " + to_string(s0), [&] {
      const SignalExpr shifted = multiply_exp(f, s0);
      const TransformResult lhs = laplace_shift(f, s0);
      rec.exact(lhs.expr, laplace_symbolic(shifted).expr);
      laplace_shadow(rec, sampler, lhs, shifted, cfg);
    });
  }
  {
    const auto n = static_cast<unsigned>(sampler.uniform_int(1, 4));
    const SignalExpr f = sampler.laplace_signal_flat(n);
    rec.run("differentiation", "f = " + print_signal(f) + "; n = " + std::to_string(n), [&] {
      const SignalExpr d = differentiate(f, n);
      const TransformResult lhs = laplace_derivative(f, n);
      rec.exact(lhs.expr, laplace_symbolic(d).expr);
      // vanishing initial values reduce the rule to s^n F(s)
      const RationalExpr sn{ExactPolynomial::monomial(1, n), ExactPolynomial{1}, Var::S};
      rec.exact(lhs.expr, sn * laplace_symbolic(f).expr);
      laplace_shadow(rec, sampler, lhs, d, cfg);
    });
  }
  {
    const auto n = static_cast<unsigned>(sampler.uniform_int(1, 4));
    const SignalExpr f = sampler.laplace_signal();
    rec.run("differentiation_initial_values", "f = " + print_signal(f) + "; n = " + std::to_string(n), [&] {
      const SignalExpr d = differentiate(f, n);
      const TransformResult lhs = laplace_derivative(f, n);
      rec.exact(lhs.expr, laplace_symbolic(d).expr);
      laplace_shadow(rec, sampler, lhs, d, cfg);
    });
  }
  {
    const SignalExpr f = sampler.laplace_signal();
    rec.run("integration", "f = " + print_signal(f), [&] {
      const SignalExpr F = antiderivative(f);
      const TransformResult lhs = laplace_integral(f);
      rec.exact(lhs.expr, laplace_symbolic(F).expr);
      laplace_shadow(rec, sampler, lhs, F, cfg);
    });
  }
}

void table3_round(Recorder& rec, SignalSampler& sampler, const QuadratureConfig& cfg) {
  {
    const SignalExpr f = sampler.fourier_signal();
    const SignalExpr g = sampler.fourier_signal();
    const GaussianRational a = sampler.gaussian();
    const GaussianRational b = sampler.gaussian();
    const SignalExpr combo = scale(a, f) + scale(b, g);
    rec.run("linearity", "f = " + print_signal(f) + "; g = " + print_signal(g) + "; a = " + to_string(a) +
                             "; b = " + to_string(b),
            [&] {
              const TransformResult lhs = fourier_symbolic(combo);
              rec.exact(lhs.expr, a * fourier_symbolic(f).expr + b * fourier_symbolic(g).expr);
              fourier_shadow(rec, sampler, lhs, combo, cfg);
            });
  }
  {
    const SignalExpr f = sampler.fourier_signal();
    const Rational w0 = sampler.rational(-6, 6, 2);
    rec.run("frequency_shift", "f = " + print_signal(f) + "; w0 = " + to_string(w0), [&] {
      const SignalExpr shifted = multiply_exp(f, GaussianRational{0, w0});
      const TransformResult lhs = fourier_shift(f, w0);
      rec.exact(lhs.expr, fourier_symbolic(shifted).expr);
      fourier_shadow(rec, sampler, lhs, shifted, cfg);
    });
  }
  for (OscKind kind : {OscKind::Cos, OscKind::Sin}) {
    const SignalExpr f = sampler.fourier_signal();
    const Rational w0 = sampler.rational(0, 6, 2);
    const std::string name = kind == OscKind::Cos ? "modulation_cos" : "modulation_sin";
    rec.run(name, "f = " + print_signal(f) + "; w0 = " + to_string(w0), [&] {
      const SignalExpr m = modulate(f, w0, kind);
      const TransformResult lhs = fourier_modulate(f, w0, kind);
      rec.exact(lhs.expr, fourier_symbolic(m).expr);
      fourier_shadow(rec, sampler, lhs, m, cfg);
    });
  }
  {
    const SignalExpr f = sampler.fourier_signal();
    rec.run("time_reversal", "f = " + print_signal(f), [&] {
      const SignalExpr r = reverse(f);
      const TransformResult lhs = fourier_time_reverse(f);
      rec.exact(lhs.expr, fourier_symbolic(r).expr);
      rec.exact(fourier_time_reverse(r).expr, fourier_symbolic(f).expr);
      fourier_shadow(rec, sampler, lhs, r, cfg);
    });
  }
  {
    const auto n = static_cast<unsigned>(sampler.uniform_int(1, 3));
    const SignalExpr f = sampler.fourier_signal_flat(n);
    rec.run("differentiation", "f = " + print_signal(f) + "; n = " + std::to_string(n), [&] {
      const SignalExpr d = differentiate(f, n);
      const TransformResult lhs = fourier_derivative(f, n);
      rec.exact(lhs.expr, fourier_symbolic(d).expr);
      fourier_shadow(rec, sampler, lhs, d, cfg);
    });
  }
}

void bridge_round(Recorder& rec, SignalSampler& sampler, const QuadratureConfig& cfg) {
  const SignalExpr f = sampler.fourier_causal_signal();
  rec.run("laplace_to_fourier", "f = " + print_signal(f), [&] {
    const TransformResult lap = laplace_symbolic(f);
    const TransformResult four = fourier_symbolic(f);
    rec.exact(lap.expr.relabel(Var::IOmega), four.expr);
    rec.exact(laplace_to_fourier(f).expr, four.expr);
    const double w = sampler.uniform_real(-10.0, 10.0);
    std::ostringstream where;
    where.precision(17);
    where << "w = " << w;
    rec.numeric(laplace_numeric(f, {0.0, w}, cfg), fourier_numeric(f, w, cfg), where.str());
  });
}

void case_studies_round(Recorder& rec, SignalSampler& sampler) {
  auto positive = [&] { return sampler.rational(1, 50, 20); };
  {
    const LtcParams p{positive(), positive(), positive()};
    rec.run("ltc", "R = " + to_string(p.R) + "; L = " + to_string(p.L) + "; C = " + to_string(p.C), [&] {
      const CaseStudy c = ltc_model(p);
      rec.exact(transfer_function(c.ode), c.expected);
    });
  }
  {
    const SuspensionParams p{positive(), positive(), positive()};
    rec.run("suspension", "M = " + to_string(p.M) + "; b = " + to_string(p.b) + "; k = " + to_string(p.k), [&] {
      const CaseStudy c = suspension_model(p);
      rec.exact(frequency_response(c.ode), c.expected);
    });
  }
  {
    const SallenKeyParams p{positive(), positive(), positive(), positive()};
    rec.run("sallen_key",
            "R1 = " + to_string(p.R1) + "; R2 = " + to_string(p.R2) + "; C1 = " + to_string(p.C1) +
                "; C2 = " + to_string(p.C2),
            [&] {
              const CaseStudy c = sallen_key_model(p);
              rec.exact(transfer_function(c.ode), c.expected);
            });
  }
}

void oracle_round(Recorder& rec, SignalSampler& sampler, const QuadratureConfig& cfg, int round) {
  const auto& catalog = signal_catalog();
  const CatalogEntry& e = catalog[static_cast<std::size_t>(round) % catalog.size()];
  if (is_causal(e.signal)) {
    rec.run("laplace_oracle", "f = " + e.text, [&] {
      const TransformResult r = laplace_symbolic(e.signal);
      laplace_shadow(rec, sampler, r, e.signal, cfg);
    });
  }
  if (fourier_exists(e.signal).holds()) {
    rec.run("fourier_oracle", "f = " + e.text, [&] {
      const TransformResult r = fourier_symbolic(e.signal);
      fourier_shadow(rec, sampler, r, e.signal, cfg);
    });
  }
}

}  // namespace

// --- sampler ----------------------------------------------------------------

Rational SignalSampler::rational(int lo, int hi, int max_den) {
  return canonical(uniform_int(lo, hi), uniform_int(1, max_den));
}

GaussianRational SignalSampler::gaussian(bool complex) {
  Rational re = rational(-4, 4, 3);
  Rational im = complex && uniform_int(0, 1) == 0 ? rational(-4, 4, 3) : Rational{0};
  if (sgn(re) == 0 && sgn(im) == 0) re = 1;
  return {re, im};
}

SignalExpr SignalSampler::atom(Support support, bool decaying, unsigned min_degree) {
  Atom a;
  a.support = support;
  a.degree = min_degree + static_cast<unsigned>(uniform_int(0, 2));
  // decaying rates stay in [-3, -1/2]; growing ones in [-3, 1]
  const Rational re = decaying ? canonical(-uniform_int(1, 6), 2) : canonical(uniform_int(-6, 2), 2);
  const Rational im = uniform_int(0, 3) == 0 ? canonical(uniform_int(-4, 4), 2) : Rational{0};
  a.rate = GaussianRational{re, im};
  switch (uniform_int(0, 5)) {
    case 0:
      a.osc = {OscKind::Sin, canonical(uniform_int(1, 6), 2)};
      break;
    case 1:
      a.osc = {OscKind::Cos, canonical(uniform_int(1, 6), 2)};
      break;
    default:
      break;
  }
  return make_atom(a);
}

SignalExpr SignalSampler::combine(std::vector<SignalExpr> terms) {
  for (auto& t : terms) t = scale(gaussian(), std::move(t));
  if (terms.size() == 1) return terms.front();
  return sum(std::move(terms));
}

SignalExpr SignalSampler::laplace_signal() {
  std::vector<SignalExpr> terms;
  const int count = uniform_int(1, 3);
  for (int k = 0; k < count; ++k) terms.push_back(atom(Support::Causal, false, 0));
  return combine(std::move(terms));
}

SignalExpr SignalSampler::laplace_signal_flat(unsigned min_degree) {
  std::vector<SignalExpr> terms;
  const int count = uniform_int(1, 3);
  for (int k = 0; k < count; ++k) terms.push_back(atom(Support::Causal, false, min_degree));
  return combine(std::move(terms));
}

SignalExpr SignalSampler::fourier_signal() {
  std::vector<SignalExpr> terms;
  const int count = uniform_int(1, 3);
  for (int k = 0; k < count; ++k) {
    switch (uniform_int(0, 2)) {
      case 0:
        terms.push_back(atom(Support::Causal, true, 0));
        break;
      case 1:
        terms.push_back(reverse(atom(Support::Causal, true, 0)));
        break;
      default:
        terms.push_back(atom(Support::TwoSidedEven, true, 0));
        break;
    }
  }
  return combine(std::move(terms));
}

SignalExpr SignalSampler::fourier_causal_signal() {
  std::vector<SignalExpr> terms;
  const int count = uniform_int(1, 3);
  for (int k = 0; k < count; ++k) terms.push_back(atom(Support::Causal, true, 0));
  return combine(std::move(terms));
}

SignalExpr SignalSampler::fourier_signal_flat(unsigned min_degree) {
  std::vector<SignalExpr> terms;
  const int count = uniform_int(1, 3);
  for (int k = 0; k < count; ++k) {
    SignalExpr a = atom(Support::Causal, true, min_degree);
    terms.push_back(uniform_int(0, 1) == 0 ? a : reverse(a));
  }
  return combine(std::move(terms));
}

// --- catalog and suites -----------------------------------------------------

const std::vector<CatalogEntry>& signal_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    const std::vector<std::pair<std::string, std::string>> rows{
        {"unit_step", "causal(1)"},
        {"exp_decay", "causal(exp(-1*t))"},
        {"ramp_decay", "causal(t*exp(-2*t))"},
        {"quadratic_decay", "causal(t^2*exp(-1*t))"},
        {"damped_cos", "causal(exp(-1/2*t)*cos(3*t))"},
        {"damped_sin", "causal(exp(-1*t)*sin(2*t))"},
        {"ramp_damped_cos", "causal(t*exp(-1*t)*cos(2*t))"},
        {"exp_growth", "causal(exp(2*t))"},
        {"ramp", "causal(t)"},
        {"cos", "causal(cos(2*t))"},
        {"two_sided_exp", "twosided(exp(-1*abs(t)))"},
        {"two_sided_ramp_cos", "twosided(abs(t)*exp(-2*abs(t))*cos(1*abs(t)))"},
        {"reversed_exp", "reverse(causal(exp(-3/2*t)))"},
        {"mixed_sum", "causal(exp(-1*t)) + 2*causal(t*exp(-3*t))"},
        {"complex_rate", "causal(exp((-1+2 i)*t))"},
        {"two_sided_sin", "twosided(exp(-1/2*abs(t))*sin(1*abs(t)))"},
    };
    std::vector<CatalogEntry> out;
    for (const auto& [name, text] : rows) out.push_back({name, text, parse_signal(text)});
    return out;
  }();
  return catalog;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"table2", "table3", "bridge", "case-studies", "oracle"};
  return names;
}

ValidationReport run_suite(const std::string& suite, std::uint64_t seed, int n, const QuadratureConfig& cfg) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  if (n < 0) throw std::invalid_argument("case count must be non-negative");
  cfg.validate();
  ValidationReport report;
  report.suite = suite;
  report.seed = seed;
  std::mt19937_64 rng{seed};
  SignalSampler sampler{rng};
  Recorder rec{report};
  for (int round = 0; round < n; ++round) {
    if (suite == "table2") {
      table2_round(rec, sampler, cfg);
    } else if (suite == "table3") {
      table3_round(rec, sampler, cfg);
    } else if (suite == "bridge") {
      bridge_round(rec, sampler, cfg);
    } else if (suite == "case-studies") {
      case_studies_round(rec, sampler);
    } else {
      oracle_round(rec, sampler, cfg, round);
    }
  }
  return report;
}

}  // namespace xformlab
