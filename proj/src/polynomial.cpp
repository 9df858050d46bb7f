#include "xformlab/polynomial.hpp"

#include <Eigen/Eigenvalues>

namespace xformlab {

std::vector<Complex> roots(const FloatPolynomial& p) {
  const int n = p.degree();
  if (n < 1) return {};
  const Complex lead = p.leading();
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeff(static_cast<std::size_t>(i)) / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  const Eigen::VectorXcd ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace xformlab
