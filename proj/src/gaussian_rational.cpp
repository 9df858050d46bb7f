#include "xformlab/gaussian_rational.hpp"

#include <stdexcept>

namespace xformlab {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero Gaussian rational");
  // (a + bi)/(c + di) = (a + bi)(c - di)/(c^2 + d^2)
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re());
  if (sgn(z.re()) == 0) return to_string(z.im()) + " i";
  std::string im = to_string(z.im());
  if (im.front() != '-') im.insert(0, "+");
  return to_string(z.re()) + im + " i";
}

}  // namespace xformlab
