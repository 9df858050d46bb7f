#include "xformlab/rational_expr.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "xformlab/errors.hpp"

namespace xformlab {

std::string to_string(Var v) { return v == Var::S ? "s" : "iw"; }

RationalExpr::RationalExpr(ExactPolynomial num, ExactPolynomial den, Var var) : var_{var} {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = ExactPolynomial::constant(1);
    return;
  }
  const ExactPolynomial g = gcd(num, den);
  num_ = divmod(num, g).first;
  den_ = divmod(den, g).first;
  const GaussianRational inv = GaussianRational{1} / den_.leading();
  num_ = inv * num_;
  den_ = inv * den_;
}

RationalExpr RationalExpr::from_coprime(ExactPolynomial num, ExactPolynomial den, Var var) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  RationalExpr r;
  r.var_ = var;
  if (num.is_zero()) return r;
  const GaussianRational inv = GaussianRational{1} / den.leading();
  r.num_ = inv * num;
  r.den_ = inv * den;
  return r;
}

GaussianRational RationalExpr::eval_exact(const GaussianRational& z) const {
  const GaussianRational d = den_(z);
  if (d.is_zero()) throw PoleError("pole at " + to_string(var_) + " = " + to_string(z));
  return num_(z) / d;
}

RationalExpr RationalExpr::substitute_affine(const GaussianRational& alpha, const GaussianRational& beta) const {
  if (alpha.is_zero()) return {num_.compose_affine(alpha, beta), den_.compose_affine(alpha, beta), var_};
  // an invertible substitution keeps num and den coprime
  return from_coprime(num_.compose_affine(alpha, beta), den_.compose_affine(alpha, beta), var_);
}

namespace {

void require_same_var(const RationalExpr& a, const RationalExpr& b) {
  if (a.var() != b.var()) {
    throw VarMismatch("rational functions in different variables (" + to_string(a.var()) + " vs " +
                      to_string(b.var()) + ")");
  }
}

}  // namespace

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  require_same_var(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_, a.var_};
  const ExactPolynomial g = gcd(a.den_, b.den_);
  if (g.degree() == 0) {
    // coprime denominators leave nothing to cancel
    return RationalExpr::from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, a.var_);
  }
  const ExactPolynomial bq = divmod(b.den_, g).first;
  const ExactPolynomial aq = divmod(a.den_, g).first;
  return {a.num_ * bq + b.num_ * aq, a.den_ * bq, a.var_};
}

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  require_same_var(a, b);
  return {a.num_ * b.num_, a.den_ * b.den_, a.var_};
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
  require_same_var(a, b);
  if (b.is_zero()) throw std::domain_error("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_, a.var_};
}

Complex eval_rational(const RationalExpr& f, Complex z) {
  const Complex d = to_float(f.den())(z);
  const double scale = 1.0 + std::pow(std::abs(z), f.den().degree());
  if (!(std::abs(d) > 1e-12 * scale)) {
    std::ostringstream os;
    os << "evaluation at or near a pole: " << to_string(f.var()) << " = " << z.real() << (z.imag() < 0 ? "" : "+")
       << z.imag() << "i";
    throw PoleError(os.str());
  }
  return to_float(f.num())(z) / d;
}

Complex eval_rational_exact(const RationalExpr& f, Complex z) {
  const GaussianRational point{Rational{z.real()}, Rational{z.imag()}};
  return f.eval_exact(point).to_complex();
}

Complex eval_at_frequency(const RationalExpr& f, double w) { return eval_rational(f, Complex{0.0, w}); }

bool rational_equal(const RationalExpr& f, const RationalExpr& g) {
  require_same_var(f, g);
  return f.num() * g.den() == g.num() * f.den();
}

namespace {

std::string coeff_text(const GaussianRational& c) {
  const std::string s = to_string(c);
  return (c.is_real() || sgn(c.re()) == 0) ? s : "(" + s + ")";
}

}  // namespace

std::string to_string(const ExactPolynomial& p, Var var) {
  if (p.is_zero()) return "0";
  const std::string x = var == Var::S ? "s" : "(iw)";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const GaussianRational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? x : x + "^" + std::to_string(k));
    std::string term;
    if (k == 0) {
      term = coeff_text(c);
    } else if (c == GaussianRational{1}) {
      term = mono;
    } else if (c == GaussianRational{-1}) {
      term = "-" + mono;
    } else {
      term = coeff_text(c) + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::string to_string(const RationalExpr& f) {
  const std::string n = to_string(f.num(), f.var());
  if (f.den().degree() == 0) return n;
  const bool bare = f.num().degree() <= 0 && n.find_first_of("+- /", 1) == std::string::npos;
  return (bare ? n : "(" + n + ")") + "/(" + to_string(f.den(), f.var()) + ")";
}

}  // namespace xformlab
