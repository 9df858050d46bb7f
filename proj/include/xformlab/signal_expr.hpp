#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "xformlab/gaussian_rational.hpp"

namespace xformlab {

enum class Support {
  Causal,        ///< τ = t, zero for t < 0
  TwoSidedEven,  ///< τ = |t| over the whole line
};

enum class OscKind { None, Sin, Cos };

struct Oscillation {
  OscKind kind = OscKind::None;
  Rational freq{0};

  friend bool operator==(const Oscillation& a, const Oscillation& b) {
    return a.kind == b.kind && (a.kind == OscKind::None || a.freq == b.freq);
  }
};

/// τ^degree · e^{rate·τ} · osc(freq·τ), with τ determined by `support`.
struct Atom {
  unsigned degree = 0;
  GaussianRational rate;
  Oscillation osc;
  Support support = Support::Causal;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Total order on atoms, used to sort canonical term lists.
int compare(const Atom& a, const Atom& b);

struct ScaleNode;
struct SumNode;
struct ReverseNode;

/// Immutable signal expression tree. Copies share structure.
class SignalExpr {
 public:
  struct Node;

  /// The unit step, causal(1).
  SignalExpr();

  template <typename Visitor>
  decltype(auto) visit(Visitor&& vis) const;

  const Atom* as_atom() const;

  friend bool operator==(const SignalExpr& a, const SignalExpr& b);

 private:
  explicit SignalExpr(std::shared_ptr<const Node> node) : node_{std::move(node)} {}

  friend SignalExpr make_atom(Atom a);
  friend SignalExpr scale(GaussianRational coeff, SignalExpr inner);
  friend SignalExpr sum(std::vector<SignalExpr> terms);
  friend SignalExpr reverse(SignalExpr inner);

  std::shared_ptr<const Node> node_;
};

struct ScaleNode {
  GaussianRational coeff;
  SignalExpr inner;
};
struct SumNode {
  std::vector<SignalExpr> terms;
};
struct ReverseNode {
  SignalExpr inner;
};

struct SignalExpr::Node {
  std::variant<Atom, ScaleNode, SumNode, ReverseNode> value;
};

template <typename Visitor>
decltype(auto) SignalExpr::visit(Visitor&& vis) const {
  return std::visit(std::forward<Visitor>(vis), node_->value);
}

/// Throws InvalidSignal for a two-sided atom with Re(rate) >= 0.
SignalExpr make_atom(Atom a);
SignalExpr scale(GaussianRational coeff, SignalExpr inner);
/// Throws InvalidSignal on an empty list.
SignalExpr sum(std::vector<SignalExpr> terms);
/// t ↦ f(−t).
SignalExpr reverse(SignalExpr inner);

inline SignalExpr causal(unsigned degree, GaussianRational rate, Oscillation osc = {}) {
  return make_atom({degree, std::move(rate), std::move(osc), Support::Causal});
}
inline SignalExpr two_sided(unsigned degree, GaussianRational rate, Oscillation osc = {}) {
  return make_atom({degree, std::move(rate), std::move(osc), Support::TwoSidedEven});
}
inline SignalExpr unit_step() { return causal(0, 0); }
/// The identically-zero signal, represented as 0·causal(1).
inline SignalExpr zero_signal() { return scale(0, unit_step()); }

inline SignalExpr operator+(SignalExpr a, SignalExpr b) { return sum({std::move(a), std::move(b)}); }
inline SignalExpr operator*(GaussianRational c, SignalExpr f) { return scale(std::move(c), std::move(f)); }

// --- canonical term lists -------------------------------------------------

/// coeff · atom(±t); `reversed` is never set on two-sided atoms.
struct Term {
  GaussianRational coeff;
  bool reversed = false;
  Atom atom;
};

/// Flattens f into a sorted list of distinct terms with nonzero coefficients.
/// Oscillations are canonical: freq > 0, cos(0·τ) removed, sin(0·τ) dropped.
std::vector<Term> normalize_terms(const SignalExpr& f);
/// Canonical expression for a term list; the empty list yields zero_signal().
SignalExpr from_terms(const std::vector<Term>& terms);
inline SignalExpr normalize(const SignalExpr& f) { return from_terms(normalize_terms(f)); }

/// True when f vanishes for every t < 0.
bool is_causal(const SignalExpr& f);

// --- pointwise semantics ---------------------------------------------------

Complex eval_signal(const SignalExpr& f, double t);
Complex eval_atom(const Atom& a, double t);

/// Exact one-sided limits at t = 0.
GaussianRational value_at_zero_plus(const SignalExpr& f);
GaussianRational value_at_zero_minus(const SignalExpr& f);

/// Floating-point copy of a signal's canonical terms for fast repeated
/// evaluation inside quadrature loops.
class CompiledSignal {
 public:
  explicit CompiledSignal(const SignalExpr& f);

  /// f(t)·e^{-damping·t}, with the damping folded into each exponent so that
  /// growing terms do not overflow before they are damped.
  Complex operator()(double t, Complex damping = {0.0, 0.0}) const;

 private:
  struct Piece {
    Complex coeff;
    Complex rate;
    unsigned degree;
    OscKind osc;
    double freq;
    int side;  ///< +1 causal, -1 reversed, 0 two-sided
  };
  std::vector<Piece> pieces_;
};

// --- time-domain calculus --------------------------------------------------

/// Classical derivative on t ≠ 0, returned in canonical form. Jumps at 0 are
/// not represented. Throws NonDifferentiable when f has a two-sided atom.
SignalExpr differentiate(const SignalExpr& f);
SignalExpr differentiate(const SignalExpr& f, unsigned order);

/// Rewrites every sin/cos factor as a pair of complex exponentials.
std::vector<Term> euler_terms(const SignalExpr& f);

/// Splits every two-sided atom g(|t|) into g(t) + g(−t) (equal except at t = 0).
std::vector<Term> split_two_sided(const std::vector<Term>& terms);

/// e^{c·t}·f(t). Two-sided atoms are split first, so the result is equal to
/// the product everywhere except possibly at t = 0.
SignalExpr multiply_exp(const SignalExpr& f, const GaussianRational& c);

/// cos(w0·t)·f(t) or sin(w0·t)·f(t), same caveat at t = 0 as multiply_exp.
SignalExpr modulate(const SignalExpr& f, const Rational& w0, OscKind kind);

/// t ↦ ∫₀ᵗ f for causal f; throws NonCausalInput otherwise.
SignalExpr antiderivative(const SignalExpr& f);

}  // namespace xformlab
