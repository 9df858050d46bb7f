#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace xformlab {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Canonical text of an exact rational: "p" or "p/q".
std::string to_string(const Rational& q);

/// Exact complex number re + im*i with rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_{re} {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_{std::move(re)} { re_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_{std::move(re)}, im_{std::move(im)} {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational{0}, Rational{1}}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// Squared modulus, exact.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// "p/q", "p/q i", or "p/q+r/s i" (no spaces around the sign).
std::string to_string(const GaussianRational& z);

inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline bool is_zero(const Complex& z) { return z == Complex{0.0, 0.0}; }
inline Complex to_complex(const GaussianRational& z) { return z.to_complex(); }
inline Complex to_complex(const Complex& z) { return z; }

}  // namespace xformlab
