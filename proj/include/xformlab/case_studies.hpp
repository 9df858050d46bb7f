#pragma once

#include <map>
#include <string>

#include "xformlab/ode.hpp"

namespace xformlab {

/// Linear transfer converter.
struct LtcParams {
  Rational R{1}, L{1}, C{1};
};
/// Automobile suspension: mass M, damping b, spring stiffness k.
struct SuspensionParams {
  Rational M{1}, b{1}, k{1};
};
/// Second-order Sallen-Key low-pass filter.
struct SallenKeyParams {
  Rational R1{1}, R2{1}, C1{1}, C2{1};
};

/// A constructed ODE and the closed-form response it must reproduce.
struct CaseStudy {
  LinearODE ode;
  RationalExpr expected;
};

/// H(s) = (s² − 1/(LC)) / (1/(LC) − (2/(RC))·s + s²)
CaseStudy ltc_model(const LtcParams& p);
/// H(iω) = ((b/M)·iω + k/M) / (k/M + (b/M)·iω + (iω)²)
CaseStudy suspension_model(const SuspensionParams& p);
/// H(s) = 1 / (R1·C1·R2·C2·s² + C2·(R1 + R2)·s + 1)
CaseStudy sallen_key_model(const SallenKeyParams& p);

/// Model names accepted by export_case: "ltc", "suspension", "sallen-key".
/// Parameters not present in `params` keep their unit default. Throws
/// std::invalid_argument on an unknown model or parameter name and
/// NonPositiveParameter on a non-positive value.
std::string export_case(const std::string& model, const std::map<std::string, Rational>& params);

}  // namespace xformlab
