#include "xformlab/signal_expr.hpp"

#include <algorithm>
#include <cmath>

#include "xformlab/errors.hpp"

namespace xformlab {

namespace {

int compare_rational(const Rational& a, const Rational& b) { return cmp(a, b) < 0 ? -1 : (cmp(a, b) > 0 ? 1 : 0); }

int compare_terms(const Term& a, const Term& b) {
  if (a.reversed != b.reversed) return a.reversed ? 1 : -1;
  return compare(a.atom, b.atom);
}

/// Brings an oscillation into canonical form; returns false when the term vanishes.
bool canonicalize_osc(Term& term) {
  Oscillation& osc = term.atom.osc;
  switch (osc.kind) {
    case OscKind::None:
      osc.freq = 0;
      return true;
    case OscKind::Cos:
      if (sgn(osc.freq) == 0) {
        osc = {};
      } else if (sgn(osc.freq) < 0) {
        osc.freq = -osc.freq;
      }
      return true;
    case OscKind::Sin:
      if (sgn(osc.freq) == 0) return false;
      if (sgn(osc.freq) < 0) {
        osc.freq = -osc.freq;
        term.coeff = -term.coeff;
      }
      return true;
  }
  return true;
}

/// Sorted, merged, zero-free form of an arbitrary term list.
std::vector<Term> canonicalize(std::vector<Term> raw) {
  std::vector<Term> terms;
  terms.reserve(raw.size());
  for (auto& t : raw) {
    if (t.atom.support == Support::TwoSidedEven) t.reversed = false;
    if (t.coeff.is_zero() || !canonicalize_osc(t)) continue;
    terms.push_back(std::move(t));
  }
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return compare_terms(a, b) < 0; });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() && compare_terms(merged.back(), t) == 0) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  return merged;
}

void flatten(const SignalExpr& f, const GaussianRational& coeff, bool reversed, std::vector<Term>& out) {
  f.visit([&](const auto& node) {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, Atom>) {
      out.push_back({coeff, reversed, node});
    } else if constexpr (std::is_same_v<T, ScaleNode>) {
      flatten(node.inner, coeff * node.coeff, reversed, out);
    } else if constexpr (std::is_same_v<T, SumNode>) {
      for (const auto& term : node.terms) flatten(term, coeff, reversed, out);
    } else {
      flatten(node.inner, coeff, !reversed, out);
    }
  });
}

GaussianRational atom_value_at_zero(const Atom& a) {
  if (a.degree > 0 || a.osc.kind == OscKind::Sin) return 0;
  return 1;
}

Rational falling_factorial(unsigned n, unsigned k) {
  Rational r{1};
  for (unsigned j = 0; j < k; ++j) r *= n - j;
  return r;
}

}  // namespace

int compare(const Atom& a, const Atom& b) {
  if (a.support != b.support) return a.support == Support::Causal ? -1 : 1;
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  if (int c = compare_rational(a.rate.re(), b.rate.re()); c != 0) return c;
  if (int c = compare_rational(a.rate.im(), b.rate.im()); c != 0) return c;
  if (a.osc.kind != b.osc.kind) return a.osc.kind < b.osc.kind ? -1 : 1;
  if (a.osc.kind == OscKind::None) return 0;
  return compare_rational(a.osc.freq, b.osc.freq);
}

SignalExpr::SignalExpr() : SignalExpr(unit_step()) {}

const Atom* SignalExpr::as_atom() const { return std::get_if<Atom>(&node_->value); }

bool operator==(const SignalExpr& a, const SignalExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& va = a.node_->value;
  const auto& vb = b.node_->value;
  if (va.index() != vb.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(vb);
        if constexpr (std::is_same_v<T, Atom>) {
          return x == y;
        } else if constexpr (std::is_same_v<T, ScaleNode>) {
          return x.coeff == y.coeff && x.inner == y.inner;
        } else if constexpr (std::is_same_v<T, SumNode>) {
          return x.terms == y.terms;
        } else {
          return x.inner == y.inner;
        }
      },
      va);
}

SignalExpr make_atom(Atom a) {
  a.osc.freq.canonicalize();
  if (a.support == Support::TwoSidedEven && sgn(a.rate.re()) >= 0) {
    throw InvalidSignal("two-sided atom needs Re(c) < 0, got c = " + to_string(a.rate));
  }
  if (a.osc.kind == OscKind::None) a.osc.freq = 0;
  return SignalExpr{std::make_shared<const SignalExpr::Node>(SignalExpr::Node{std::move(a)})};
}

SignalExpr scale(GaussianRational coeff, SignalExpr inner) {
  return SignalExpr{
      std::make_shared<const SignalExpr::Node>(SignalExpr::Node{ScaleNode{std::move(coeff), std::move(inner)}})};
}

SignalExpr sum(std::vector<SignalExpr> terms) {
  if (terms.empty()) throw InvalidSignal("sum of zero terms");
  return SignalExpr{std::make_shared<const SignalExpr::Node>(SignalExpr::Node{SumNode{std::move(terms)}})};
}

SignalExpr reverse(SignalExpr inner) {
  return SignalExpr{std::make_shared<const SignalExpr::Node>(SignalExpr::Node{ReverseNode{std::move(inner)}})};
}

std::vector<Term> normalize_terms(const SignalExpr& f) {
  std::vector<Term> raw;
  flatten(f, 1, false, raw);
  return canonicalize(std::move(raw));
}

SignalExpr from_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return zero_signal();
  std::vector<SignalExpr> parts;
  parts.reserve(terms.size());
  for (const auto& t : terms) {
    SignalExpr e = make_atom(t.atom);
    if (t.reversed) e = reverse(std::move(e));
    if (t.coeff != GaussianRational{1}) e = scale(t.coeff, std::move(e));
    parts.push_back(std::move(e));
  }
  if (parts.size() == 1) return parts.front();
  return sum(std::move(parts));
}

bool is_causal(const SignalExpr& f) {
  const auto terms = normalize_terms(f);
  return std::all_of(terms.begin(), terms.end(),
                     [](const Term& t) { return !t.reversed && t.atom.support == Support::Causal; });
}

Complex eval_atom(const Atom& a, double t) {
  if (a.support == Support::Causal && t < 0.0) return {0.0, 0.0};
  const double tau = std::abs(t);
  double poly = 1.0;
  for (unsigned k = 0; k < a.degree; ++k) poly *= tau;
  Complex value = poly * std::exp(Complex{a.rate.re().get_d() * tau, a.rate.im().get_d() * tau});
  switch (a.osc.kind) {
    case OscKind::None:
      break;
    case OscKind::Sin:
      value *= std::sin(a.osc.freq.get_d() * tau);
      break;
    case OscKind::Cos:
      value *= std::cos(a.osc.freq.get_d() * tau);
      break;
  }
  return value;
}

Complex eval_signal(const SignalExpr& f, double t) {
  return f.visit([t](const auto& node) -> Complex {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, Atom>) {
      return eval_atom(node, t);
    } else if constexpr (std::is_same_v<T, ScaleNode>) {
      return node.coeff.to_complex() * eval_signal(node.inner, t);
    } else if constexpr (std::is_same_v<T, SumNode>) {
      Complex acc{0.0, 0.0};
      for (const auto& term : node.terms) acc += eval_signal(term, t);
      return acc;
    } else {
      return eval_signal(node.inner, -t);
    }
  });
}

CompiledSignal::CompiledSignal(const SignalExpr& f) {
  for (const auto& term : normalize_terms(f)) {
    const Atom& a = term.atom;
    const int side = a.support == Support::TwoSidedEven ? 0 : (term.reversed ? -1 : 1);
    pieces_.push_back({term.coeff.to_complex(), a.rate.to_complex(), a.degree, a.osc.kind, a.osc.freq.get_d(), side});
  }
}

Complex CompiledSignal::operator()(double t, Complex damping) const {
  Complex acc{0.0, 0.0};
  for (const auto& p : pieces_) {
    if ((p.side == 1 && t < 0.0) || (p.side == -1 && t > 0.0)) continue;
    const double tau = std::abs(t);
    double poly = 1.0;
    for (unsigned k = 0; k < p.degree; ++k) poly *= tau;
    Complex v = p.coeff * poly * std::exp(p.rate * tau - damping * t);
    if (p.osc == OscKind::Sin) v *= std::sin(p.freq * tau);
    if (p.osc == OscKind::Cos) v *= std::cos(p.freq * tau);
    acc += v;
  }
  return acc;
}

GaussianRational value_at_zero_plus(const SignalExpr& f) {
  GaussianRational acc;
  for (const auto& t : normalize_terms(f)) {
    if (!t.reversed) acc += t.coeff * atom_value_at_zero(t.atom);
  }
  return acc;
}

GaussianRational value_at_zero_minus(const SignalExpr& f) {
  GaussianRational acc;
  for (const auto& t : normalize_terms(f)) {
    if (t.reversed || t.atom.support == Support::TwoSidedEven) acc += t.coeff * atom_value_at_zero(t.atom);
  }
  return acc;
}

SignalExpr differentiate(const SignalExpr& f) {
  std::vector<Term> out;
  for (const auto& t : normalize_terms(f)) {
    if (t.atom.support == Support::TwoSidedEven) {
      throw NonDifferentiable("two-sided atom has a kink at t = 0; its derivative leaves the grammar");
    }
    // d/dt g(-t) = -g'(-t)
    const GaussianRational sign = t.reversed ? GaussianRational{-1} : GaussianRational{1};
    const Atom& a = t.atom;
    if (a.degree > 0) {
      Atom lower = a;
      lower.degree = a.degree - 1;
      out.push_back({sign * t.coeff * GaussianRational{static_cast<long>(a.degree)}, t.reversed, lower});
    }
    if (!a.rate.is_zero()) out.push_back({sign * t.coeff * a.rate, t.reversed, a});
    if (a.osc.kind != OscKind::None) {
      Atom turned = a;
      turned.osc.kind = a.osc.kind == OscKind::Sin ? OscKind::Cos : OscKind::Sin;
      const Rational factor = a.osc.kind == OscKind::Sin ? a.osc.freq : Rational{-a.osc.freq};
      out.push_back({sign * t.coeff * GaussianRational{factor}, t.reversed, turned});
    }
  }
  return from_terms(canonicalize(std::move(out)));
}

SignalExpr differentiate(const SignalExpr& f, unsigned order) {
  SignalExpr g = normalize(f);
  for (unsigned k = 0; k < order; ++k) g = differentiate(g);
  return g;
}

std::vector<Term> euler_terms(const SignalExpr& f) {
  std::vector<Term> out;
  const GaussianRational half{Rational{1, 2}};
  for (const auto& t : normalize_terms(f)) {
    const Atom& a = t.atom;
    if (a.osc.kind == OscKind::None) {
      out.push_back(t);
      continue;
    }
    const GaussianRational iw{Rational{0}, a.osc.freq};
    Atom up{a.degree, a.rate + iw, {}, a.support};
    Atom down{a.degree, a.rate - iw, {}, a.support};
    if (a.osc.kind == OscKind::Cos) {
      out.push_back({t.coeff * half, t.reversed, up});
      out.push_back({t.coeff * half, t.reversed, down});
    } else {
      // sin x = (e^{ix} - e^{-ix}) / (2i), and 1/(2i) = -i/2
      const GaussianRational k{Rational{0}, Rational{-1, 2}};
      out.push_back({t.coeff * k, t.reversed, up});
      out.push_back({-(t.coeff * k), t.reversed, down});
    }
  }
  return canonicalize(std::move(out));
}

std::vector<Term> split_two_sided(const std::vector<Term>& terms) {
  std::vector<Term> out;
  for (const auto& t : terms) {
    if (t.atom.support != Support::TwoSidedEven) {
      out.push_back(t);
      continue;
    }
    Atom half = t.atom;
    half.support = Support::Causal;
    out.push_back({t.coeff, false, half});
    out.push_back({t.coeff, true, half});
  }
  return out;
}

SignalExpr multiply_exp(const SignalExpr& f, const GaussianRational& c) {
  if (c.is_zero()) return normalize(f);
  std::vector<Term> out = split_two_sided(normalize_terms(f));
  for (auto& t : out) {
    // e^{ct} g(-t) = h(-t) with h(τ) = e^{-cτ} g(τ)
    t.atom.rate += t.reversed ? -c : c;
  }
  return from_terms(canonicalize(std::move(out)));
}

SignalExpr modulate(const SignalExpr& f, const Rational& w0, OscKind kind) {
  if (kind == OscKind::None) return normalize(f);
  const GaussianRational iw{Rational{0}, w0};
  const GaussianRational up_coeff = kind == OscKind::Cos ? GaussianRational{Rational{1, 2}}
                                                         : GaussianRational{Rational{0}, Rational{-1, 2}};
  const GaussianRational down_coeff = kind == OscKind::Cos ? up_coeff : -up_coeff;
  std::vector<Term> out;
  for (auto t : normalize_terms(multiply_exp(f, iw))) {
    t.coeff *= up_coeff;
    out.push_back(std::move(t));
  }
  for (auto t : normalize_terms(multiply_exp(f, -iw))) {
    t.coeff *= down_coeff;
    out.push_back(std::move(t));
  }
  return from_terms(canonicalize(std::move(out)));
}

SignalExpr antiderivative(const SignalExpr& f) {
  if (!is_causal(f)) throw NonCausalInput("antiderivative from 0 needs a causal signal");
  std::vector<Term> out;
  for (const auto& t : euler_terms(f)) {
    const Atom& a = t.atom;
    const unsigned n = a.degree;
    if (a.rate.is_zero()) {
      out.push_back({t.coeff / GaussianRational{static_cast<long>(n + 1)}, false, Atom{n + 1, 0, {}, Support::Causal}});
      continue;
    }
    // ∫₀ᵗ τ^n e^{cτ} dτ = Σ_k (-1)^k n!/(n-k)! t^{n-k} e^{ct} / c^{k+1} - (-1)^n n! / c^{n+1}
    GaussianRational c_pow = a.rate;
    for (unsigned k = 0; k <= n; ++k) {
      GaussianRational w{falling_factorial(n, k)};
      if (k % 2 == 1) w = -w;
      out.push_back({t.coeff * w / c_pow, false, Atom{n - k, a.rate, {}, Support::Causal}});
      if (k < n) c_pow *= a.rate;
    }
    GaussianRational w{falling_factorial(n, n)};
    if (n % 2 == 1) w = -w;
    out.push_back({-(t.coeff * w / c_pow), false, Atom{0, 0, {}, Support::Causal}});
  }
  return from_terms(canonicalize(std::move(out)));
}

}  // namespace xformlab
