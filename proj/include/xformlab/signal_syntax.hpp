#pragma once

#include <string>
#include <string_view>

#include "xformlab/signal_expr.hpp"

namespace xformlab {

/// Parses the textual signal syntax, e.g.
///   causal(t^2*exp(-1/2*t)*cos(3*t)) + 2*reverse(causal(exp(-t)))
///   (1/2+3/4 i)*twosided(exp(-1*abs(t)))
/// Throws SyntaxError with a line/column position.
SignalExpr parse_signal(std::string_view text);

/// Inverse of parse_signal: parse_signal(print_signal(f)) == f structurally.
std::string print_signal(const SignalExpr& f);

/// Parses a single Gaussian-rational literal such as "-3/2", "1/2+3/4 i", "2 i".
GaussianRational parse_gaussian(std::string_view text);

}  // namespace xformlab
