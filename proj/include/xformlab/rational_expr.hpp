#pragma once

#include <string>

#include "xformlab/gaussian_rational.hpp"
#include "xformlab/polynomial.hpp"

namespace xformlab {

/// Formal variable of a rational function. `IOmega` is the monomial (iω):
/// Fourier-side expressions are polynomials in iω, so s ↦ iω is a relabeling.
enum class Var { S, IOmega };

std::string to_string(Var v);

/// num/den in lowest terms with a monic denominator.
class RationalExpr {
 public:
  RationalExpr() : den_{ExactPolynomial::constant(1)} {}
  /// Throws std::domain_error when `den` is the zero polynomial.
  RationalExpr(ExactPolynomial num, ExactPolynomial den, Var var);

  /// Skips the gcd reduction; the caller guarantees gcd(num, den) = 1.
  static RationalExpr from_coprime(ExactPolynomial num, ExactPolynomial den, Var var);

  static RationalExpr constant(GaussianRational c, Var var) {
    return {ExactPolynomial::constant(std::move(c)), ExactPolynomial::constant(1), var};
  }
  /// The bare variable x.
  static RationalExpr variable(Var var) { return {ExactPolynomial{0, 1}, ExactPolynomial::constant(1), var}; }

  const ExactPolynomial& num() const noexcept { return num_; }
  const ExactPolynomial& den() const noexcept { return den_; }
  Var var() const noexcept { return var_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// Exact value at a Gaussian-rational point; throws PoleError at a pole.
  GaussianRational eval_exact(const GaussianRational& z) const;

  /// F(alpha*x + beta).
  RationalExpr substitute_affine(const GaussianRational& alpha, const GaussianRational& beta) const;
  /// Same polynomials under another variable name.
  RationalExpr relabel(Var var) const { return from_coprime(num_, den_, var); }

  RationalExpr operator-() const { return from_coprime(-num_, den_, var_); }
  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) { return a + (-b); }
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  /// Throws std::domain_error when `b` is zero.
  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator*(const GaussianRational& c, const RationalExpr& a) {
    if (c.is_zero()) return constant(0, a.var_);
    return from_coprime(c * a.num_, a.den_, a.var_);
  }

  /// Structural equality of canonical forms.
  friend bool operator==(const RationalExpr& a, const RationalExpr& b) {
    return a.var_ == b.var_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  ExactPolynomial num_;
  ExactPolynomial den_;
  Var var_ = Var::S;
};

/// num(z)/den(z) in floating point. Throws PoleError when
/// |den(z)| <= 1e-12 * (1 + |z|^deg(den)).
Complex eval_rational(const RationalExpr& f, Complex z);

/// num(z)/den(z) computed exactly at the binary value of z and rounded once.
/// Immune to the cancellation that float Horner suffers on high-degree
/// expansions. Throws PoleError when den(z) is exactly zero.
Complex eval_rational_exact(const RationalExpr& f, Complex z);

/// Value of a Fourier-side expression at real frequency w (evaluates at iω).
Complex eval_at_frequency(const RationalExpr& f, double w);

/// Exact equality by cross multiplication; throws VarMismatch on differing variables.
bool rational_equal(const RationalExpr& f, const RationalExpr& g);

/// Human-readable form, e.g. "(s + 1)/(s^2 + 3*s + 2)".
std::string to_string(const RationalExpr& f);
std::string to_string(const ExactPolynomial& p, Var var);

}  // namespace xformlab
