#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "xformlab/quadrature.hpp"
#include "xformlab/signal_expr.hpp"

namespace xformlab {

/// A named signal with its textual form.
struct CatalogEntry {
  std::string name;
  std::string text;
  SignalExpr signal;
};

/// Fixed set of grammar signals covering every atom shape and support.
const std::vector<CatalogEntry>& signal_catalog();

struct ValidationFailure {
  std::string property;
  std::string inputs;
  std::string lhs;
  std::string rhs;
  double delta = 0.0;  ///< NaN when the case threw
};

struct ValidationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases_run = 0;
  std::map<std::string, std::size_t> per_property;
  std::vector<ValidationFailure> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// "table2", "table3", "bridge", "case-studies", "oracle".
const std::vector<std::string>& suite_names();

/// Runs `n` randomized rounds of a suite. Each property checked in a round
/// counts as one case. Throws std::invalid_argument on an unknown suite.
ValidationReport run_suite(const std::string& suite, std::uint64_t seed, int n, const QuadratureConfig& cfg = {});

/// Random grammar signals used by the suites.
class SignalSampler {
 public:
  explicit SignalSampler(std::mt19937_64& rng) : rng_{rng} {}

  /// Small Gaussian rational, p/q + (p'/q')i with |p| <= 4, q <= 3.
  GaussianRational gaussian(bool complex = true);
  Rational rational(int lo, int hi, int max_den);

  /// Causal sum of 1..3 atoms; growing rates allowed.
  SignalExpr laplace_signal();
  /// Causal sum whose atoms all have degree >= min_degree (so the first
  /// min_degree derivatives vanish at 0⁺).
  SignalExpr laplace_signal_flat(unsigned min_degree);
  /// Absolutely integrable signal mixing causal, reversed and two-sided atoms.
  SignalExpr fourier_signal();
  /// Causal, absolutely integrable.
  SignalExpr fourier_causal_signal();
  /// Differentiable at 0 up to order min_degree: causal and reversed atoms of
  /// degree >= min_degree with decaying rates.
  SignalExpr fourier_signal_flat(unsigned min_degree);

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>{lo, hi}(rng_); }
  double uniform_real(double lo, double hi) { return std::uniform_real_distribution<double>{lo, hi}(rng_); }

 private:
  SignalExpr atom(Support support, bool decaying, unsigned min_degree);
  SignalExpr combine(std::vector<SignalExpr> terms);

  std::mt19937_64& rng_;
};

}  // namespace xformlab
