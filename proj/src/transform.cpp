#include "xformlab/transform.hpp"

#include <algorithm>
#include <stdexcept>

#include "xformlab/errors.hpp"
#include "xformlab/existence.hpp"

namespace xformlab {

namespace {

Rational factorial(unsigned n) {
  Rational r{1};
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

/// Σ a_{c,k}/(x - c)^k kept in partial-fraction form, so that sums never need
/// a polynomial gcd.
class FractionSum {
 public:
  /// coeff/(x - c)^power
  void add(const GaussianRational& coeff, const GaussianRational& c, unsigned power) {
    auto it = std::find_if(poles_.begin(), poles_.end(), [&](const auto& p) { return p.first == c; });
    if (it == poles_.end()) {
      poles_.emplace_back(c, std::vector<GaussianRational>{});
      it = std::prev(poles_.end());
    }
    if (it->second.size() < power) it->second.resize(power, GaussianRational{0});
    it->second[power - 1] += coeff;
  }

  /// coeff·n!/(x - c)^{n+1}
  void add_base_pair(const GaussianRational& coeff, unsigned n, const GaussianRational& c) {
    add(coeff * GaussianRational{factorial(n)}, c, n + 1);
  }

  void add_all(const FractionSum& o, const GaussianRational& scale) {
    for (const auto& [c, coeffs] : o.poles_) {
      for (std::size_t k = 0; k < coeffs.size(); ++k) add(scale * coeffs[k], c, static_cast<unsigned>(k + 1));
    }
  }

  /// The same sum under x ↦ x - shift.
  FractionSum shifted(const GaussianRational& shift) const {
    FractionSum r = *this;
    for (auto& p : r.poles_) p.first += shift;
    return r;
  }

  /// The same sum under x ↦ -x.
  FractionSum reflected() const {
    FractionSum r = *this;
    for (auto& [c, coeffs] : r.poles_) {
      c = -c;
      for (std::size_t k = 0; k < coeffs.size(); k += 2) coeffs[k] = -coeffs[k];
    }
    return r;
  }

  std::vector<GaussianRational> poles() const {
    std::vector<GaussianRational> out;
    for (const auto& p : poles_) out.push_back(p.first);
    return out;
  }

  /// A nonzero top coefficient at every pole makes the combined fraction
  /// already reduced.
  RationalExpr build(Var var) const {
    std::vector<std::pair<GaussianRational, std::vector<GaussianRational>>> live;
    for (const auto& [c, coeffs] : poles_) {
      std::vector<GaussianRational> v = coeffs;
      while (!v.empty() && v.back().is_zero()) v.pop_back();
      if (!v.empty()) live.emplace_back(c, std::move(v));
    }
    std::vector<ExactPolynomial> powers;
    for (const auto& [c, v] : live) powers.push_back(linear_power(c, v.size()));
    ExactPolynomial den = ExactPolynomial::constant(1);
    for (const auto& p : powers) den = den * p;
    ExactPolynomial num;
    for (std::size_t i = 0; i < live.size(); ++i) {
      ExactPolynomial others = ExactPolynomial::constant(1);
      for (std::size_t j = 0; j < live.size(); ++j) {
        if (j != i) others = others * powers[j];
      }
      const auto& [c, v] = live[i];
      const ExactPolynomial linear{-c, 1};
      // Σ_k a_k (x - c)^{m-k} by Horner in (x - c)
      ExactPolynomial local;
      for (const auto& a : v) local = local * linear + ExactPolynomial::constant(a);
      num = num + local * others;
    }
    return RationalExpr::from_coprime(std::move(num), std::move(den), var);
  }

 private:
  static ExactPolynomial linear_power(const GaussianRational& c, std::size_t m) {
    const ExactPolynomial linear{-c, 1};
    ExactPolynomial p = ExactPolynomial::constant(1);
    for (std::size_t k = 0; k < m; ++k) p = p * linear;
    return p;
  }

  std::vector<std::pair<GaussianRational, std::vector<GaussianRational>>> poles_;
};

void add_unique(std::vector<GaussianRational>& set, const GaussianRational& z) {
  if (std::find(set.begin(), set.end(), z) == set.end()) set.push_back(z);
}

/// Keeps the candidates that are actual poles and checks that they account
/// for the whole denominator.
std::vector<GaussianRational> confirm_poles(const RationalExpr& expr, const std::vector<GaussianRational>& candidates) {
  std::vector<GaussianRational> poles;
  ExactPolynomial rest = expr.den();
  for (const auto& c : candidates) {
    const ExactPolynomial linear{-c, 1};
    bool found = false;
    while (rest.degree() > 0) {
      auto [q, r] = divmod(rest, linear);
      if (!r.is_zero()) break;
      rest = std::move(q);
      found = true;
    }
    if (found) add_unique(poles, c);
  }
  if (rest.degree() > 0) throw std::logic_error("transform denominator has poles outside the tracked set");
  std::sort(poles.begin(), poles.end(), [](const GaussianRational& a, const GaussianRational& b) {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
  });
  return poles;
}

TransformResult make_result(RationalExpr expr, const std::vector<GaussianRational>& candidates,
                            std::vector<std::string> conditions) {
  TransformResult r;
  r.poles = confirm_poles(expr, candidates);
  if (expr.var() == Var::S) {
    for (const auto& p : r.poles) {
      if (!r.roc || p.re() > *r.roc) r.roc = p.re();
    }
  }
  r.expr = std::move(expr);
  r.conditions = std::move(conditions);
  return r;
}

void require_causal(const SignalExpr& f) {
  if (!is_causal(f)) {
    throw NonCausalInput("Laplace transform needs a causal signal: f(t) must vanish for t < 0");
  }
}

void require_fourier(const SignalExpr& f) {
  const ExistenceVerdict v = fourier_exists(f);
  if (!v.holds()) throw NotAbsolutelyIntegrable(v.reason);
}

FractionSum fourier_fractions(const SignalExpr& f) {
  FractionSum pos;
  FractionSum neg;
  for (const auto& t : euler_terms(f)) {
    // g(-t) transforms to G(-iω); the even extension g(|t|) to G(iω) + G(-iω)
    if (t.atom.support == Support::TwoSidedEven || !t.reversed) pos.add_base_pair(t.coeff, t.atom.degree, t.atom.rate);
    if (t.atom.support == Support::TwoSidedEven || t.reversed) neg.add_base_pair(t.coeff, t.atom.degree, t.atom.rate);
  }
  pos.add_all(neg.reflected(), 1);
  return pos;
}

std::vector<GaussianRational> shifted(const std::vector<GaussianRational>& poles, const GaussianRational& by,
                                      const GaussianRational& sign = 1) {
  std::vector<GaussianRational> out;
  out.reserve(poles.size());
  for (const auto& p : poles) out.push_back(sign * p + by);
  return out;
}

}  // namespace

std::vector<Complex> InitialValues::as_complex() const {
  std::vector<Complex> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.to_complex());
  return out;
}

InitialValues initial_values(const SignalExpr& f, unsigned order) {
  InitialValues iv;
  SignalExpr g = normalize(f);
  for (unsigned k = 0; k < order; ++k) {
    iv.values.push_back(value_at_zero_plus(g));
    if (k + 1 < order) g = differentiate(g);
  }
  return iv;
}

TransformResult laplace_symbolic(const SignalExpr& f) {
  require_causal(f);
  FractionSum acc;
  for (const auto& t : euler_terms(f)) acc.add_base_pair(t.coeff, t.atom.degree, t.atom.rate);
  return make_result(acc.build(Var::S), acc.poles(), {"laplace_exists"});
}

TransformResult laplace_shift(const SignalExpr& f, const GaussianRational& s0) {
  const TransformResult base = laplace_symbolic(f);
  auto conditions = base.conditions;
  conditions.push_back("frequency shift by s0 = " + to_string(s0));
  return make_result(base.expr.substitute_affine(1, -s0), shifted(base.poles, s0), std::move(conditions));
}

TransformResult laplace_derivative(const SignalExpr& f, unsigned n) {
  if (n == 0) return laplace_symbolic(f);
  const TransformResult base = laplace_symbolic(f);
  // differentiating n times also validates the n-th derivative
  (void)differentiate(f, n);
  const InitialValues iv = initial_values(f, n);
  const RationalExpr s = RationalExpr::variable(Var::S);
  RationalExpr s_pow = RationalExpr::constant(1, Var::S);
  RationalExpr correction = RationalExpr::constant(0, Var::S);
  for (unsigned k = 1; k <= n; ++k) {
    correction = correction + iv.values[n - k] * s_pow;  // s^{k-1}·f^{(n-k)}(0⁺)
    s_pow = s_pow * s;
  }
  return make_result(s_pow * base.expr - correction, base.poles, {"laplace_exists_higher_deriv " + std::to_string(n)});
}

TransformResult laplace_integral(const SignalExpr& f) {
  const TransformResult base = laplace_symbolic(f);
  auto candidates = base.poles;
  add_unique(candidates, 0);
  auto conditions = base.conditions;
  conditions.push_back("Re s > 0");
  conditions.push_back("laplace_exists of the running integral");
  return make_result(base.expr / RationalExpr::variable(Var::S), candidates, std::move(conditions));
}

TransformResult fourier_symbolic(const SignalExpr& f) {
  require_fourier(f);
  const FractionSum acc = fourier_fractions(f);
  return make_result(acc.build(Var::IOmega), acc.poles(), {"fourier_exists"});
}

TransformResult fourier_shift(const SignalExpr& f, const Rational& w0) {
  const TransformResult base = fourier_symbolic(f);
  const GaussianRational iw0{Rational{0}, w0};
  auto conditions = base.conditions;
  conditions.push_back("frequency shift by w0 = " + to_string(w0));
  return make_result(base.expr.substitute_affine(1, -iw0), shifted(base.poles, iw0), std::move(conditions));
}

TransformResult fourier_modulate(const SignalExpr& f, const Rational& w0, OscKind kind) {
  if (kind == OscKind::None) return fourier_symbolic(f);
  require_fourier(f);
  const FractionSum base = fourier_fractions(f);
  const GaussianRational iw0{Rational{0}, w0};
  FractionSum acc;
  if (kind == OscKind::Cos) {
    acc.add_all(base.shifted(iw0), GaussianRational{Rational{1, 2}});
    acc.add_all(base.shifted(-iw0), GaussianRational{Rational{1, 2}});
  } else {
    acc.add_all(base.shifted(iw0), GaussianRational{Rational{0}, Rational{-1, 2}});
    acc.add_all(base.shifted(-iw0), GaussianRational{Rational{0}, Rational{1, 2}});
  }
  RationalExpr expr = acc.build(Var::IOmega);
  const std::vector<GaussianRational> candidates = acc.poles();
  std::vector<std::string> conditions{"fourier_exists",
                                      std::string{kind == OscKind::Cos ? "cos" : "sin"} + " modulation by w0 = " +
                                          to_string(w0)};
  return make_result(std::move(expr), candidates, std::move(conditions));
}

TransformResult fourier_time_reverse(const SignalExpr& f) {
  const TransformResult base = fourier_symbolic(f);
  auto conditions = base.conditions;
  conditions.push_back("time reversal");
  return make_result(base.expr.substitute_affine(-1, 0), shifted(base.poles, 0, -1), std::move(conditions));
}

TransformResult fourier_derivative(const SignalExpr& f, unsigned n) {
  const TransformResult base = fourier_symbolic(f);
  if (n == 0) return base;
  SignalExpr g = normalize(f);
  for (unsigned k = 0; k < n; ++k) {
    const GaussianRational right = value_at_zero_plus(g);
    const GaussianRational left = value_at_zero_minus(g);
    if (right != left) {
      throw NonDifferentiable("derivative of order " + std::to_string(k) + " jumps at t = 0 (" + to_string(left) +
                              " from the left, " + to_string(right) + " from the right)");
    }
    g = differentiate(g);
  }
  require_fourier(g);
  RationalExpr x_pow = RationalExpr::constant(1, Var::IOmega);
  for (unsigned k = 0; k < n; ++k) x_pow = x_pow * RationalExpr::variable(Var::IOmega);
  return make_result(x_pow * base.expr, base.poles,
                     {"fourier_exists_higher_deriv " + std::to_string(n),
                      "derivatives below order " + std::to_string(n) + " vanish at ±infinity",
                      "derivatives below order " + std::to_string(n) + " continuous at t = 0"});
}

TransformResult laplace_to_fourier(const SignalExpr& f) {
  require_causal(f);
  require_fourier(f);
  const TransformResult laplace = laplace_symbolic(f);
  const TransformResult direct = fourier_symbolic(f);
  RationalExpr bridged = laplace.expr.relabel(Var::IOmega);
  if (!rational_equal(bridged, direct.expr)) {
    throw std::logic_error("Laplace/Fourier bridge mismatch for a causal integrable signal");
  }
  return make_result(std::move(bridged), laplace.poles, {"laplace_exists", "causal", "Re s = 0", "fourier_exists"});
}

}  // namespace xformlab
