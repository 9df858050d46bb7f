#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "xformlab/rational_expr.hpp"

namespace xformlab {

/// Σ a_k·y^{(k)} = Σ b_k·u^{(k)} with constant coefficients.
struct LinearODE {
  std::vector<GaussianRational> out_coeffs;  ///< a_0..a_n, a_n != 0
  std::vector<GaussianRational> in_coeffs;   ///< b_0..b_m
  bool zero_initial = true;

  unsigned order() const { return static_cast<unsigned>(out_coeffs.size() - 1); }
  friend bool operator==(const LinearODE&, const LinearODE&) = default;
};

/// Validates and normalizes: trailing zero input coefficients are dropped
/// (keeping at least one). Throws ZeroLeadingCoefficient when a_n = 0 and
/// std::invalid_argument on empty lists.
LinearODE make_ode(std::vector<GaussianRational> out_coeffs, std::vector<GaussianRational> in_coeffs,
                   bool zero_initial = true);

/// Parses an ODE file or a bare equation:
///
///   # comment
///   param M = 2
///   M*y'' + 3/2*y' + y^(0) = u' + u
///
/// Coefficients are products/quotients of numbers, parameters and the
/// imaginary unit `i`; derivatives are written y, y', y'' or y^(k) for
/// k <= 9. Throws SyntaxError (with line and column) or ZeroLeadingCoefficient.
LinearODE parse_ode(std::string_view text);

/// Canonical equation text; parse_ode(print_ode(ode)) == ode.
std::string print_ode(const LinearODE& ode);

/// H(s) = Σ b_k s^k / Σ a_k s^k. Throws NonzeroInitialConditions unless
/// ode.zero_initial.
RationalExpr transfer_function(const LinearODE& ode);

/// H(iω) as a rational function in the (iω) monomial.
RationalExpr frequency_response(const LinearODE& ode);

struct FrequencyResponsePoint {
  double omega = 0.0;
  double magnitude = 0.0;
  double magnitude_db = 0.0;
  double phase_rad = 0.0;  ///< in (-π, π]
};

FrequencyResponsePoint response_at(const RationalExpr& h, double omega);

/// Log-spaced Bode grid of an (iω)-domain rational function. Throws
/// PoleError naming ω when a pole lies on the imaginary axis inside
/// [w_min, w_max], std::invalid_argument on a bad range.
std::vector<FrequencyResponsePoint> bode_grid(const RationalExpr& h, double w_min, double w_max, int points);

/// True when deg num > deg den, i.e. |H| grows without bound at high frequency.
bool is_improper(const RationalExpr& h);

}  // namespace xformlab
