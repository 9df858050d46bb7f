#pragma once

#include "xformlab/gaussian_rational.hpp"

/// Canonical p/q (mpq_class does not reduce on construction).
inline xformlab::Rational frac(long p, long q = 1) {
  xformlab::Rational r{p, q};
  r.canonicalize();
  return r;
}
