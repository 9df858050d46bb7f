#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "xformlab/gaussian_rational.hpp"

namespace xformlab {

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// The coefficient vector is always trimmed: the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading coefficient.
/// Division and gcd assume `Scalar` is a field with exact arithmetic.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_{std::move(coeffs)} { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_{coeffs} { trim(); }

  static Polynomial constant(Scalar c) { return Polynomial{std::vector<Scalar>{std::move(c)}}; }
  /// c * x^k
  static Polynomial monomial(Scalar c, std::size_t k) {
    std::vector<Scalar> v(k + 1, Scalar{0});
    v[k] = std::move(c);
    return Polynomial{std::move(v)};
  }

  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar{0}; }
  const Scalar& leading() const { return coeffs_.back(); }

  /// Horner evaluation in the point type `Point` (exact or floating).
  template <typename Point>
  Point operator()(const Point& z) const {
    Point acc{0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * z + convert<Point>(*it);
    }
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar{0});
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar{0});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (xformlab::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial{std::move(v)};
  }
  friend Polynomial operator*(const Scalar& c, const Polynomial& p) {
    std::vector<Scalar> v = p.coeffs_;
    for (auto& x : v) x *= c;
    return Polynomial{std::move(v)};
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Scalar> rem = a.coeffs_;
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial{}, a};
    std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1), Scalar{0});
    for (int k = a.degree() - db; k >= 0; --k) {
      const Scalar q = rem[static_cast<std::size_t>(k + db)] / b.leading();
      quot[static_cast<std::size_t>(k)] = q;
      if (xformlab::is_zero(q)) continue;
      for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs_[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial{std::move(quot)}, Polynomial{std::move(rem)}};
  }

  /// Divides by the leading coefficient; the zero polynomial is returned as is.
  Polynomial monic() const {
    if (is_zero()) return *this;
    const Scalar inv = Scalar{1} / leading();
    return inv * *this;
  }

  /// Monic greatest common divisor (zero only when both inputs are zero).
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  /// p(alpha * x + beta), computed exactly by Horner composition.
  Polynomial compose_affine(const Scalar& alpha, const Scalar& beta) const {
    const Polynomial lin{beta, alpha};
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Scalar> v(coeffs_.size() - 1, Scalar{0});
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = Scalar(static_cast<long>(k)) * coeffs_[k];
    return Polynomial{std::move(v)};
  }

 private:
  template <typename Point>
  static Point convert(const Scalar& c) {
    if constexpr (std::is_same_v<Point, Scalar>) {
      return c;
    } else {
      return Point{to_complex(c)};
    }
  }

  void trim() {
    while (!coeffs_.empty() && xformlab::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using ExactPolynomial = Polynomial<GaussianRational>;
using FloatPolynomial = Polynomial<Complex>;

/// Approximate complex roots (companion-matrix eigenvalues).
std::vector<Complex> roots(const FloatPolynomial& p);

inline FloatPolynomial to_float(const ExactPolynomial& p) {
  std::vector<Complex> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(c.to_complex());
  return FloatPolynomial{std::move(v)};
}

}  // namespace xformlab
