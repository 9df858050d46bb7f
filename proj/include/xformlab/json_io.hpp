#pragma once

#include <json.hpp>

#include "xformlab/existence.hpp"
#include "xformlab/ode.hpp"
#include "xformlab/transform.hpp"
#include "xformlab/validation.hpp"

namespace xformlab {

using json = nlohmann::ordered_json;

json to_json(Complex z);
/// {"var", "num", "den", "expr"} with coefficients as exact strings.
json to_json(const RationalExpr& f);
/// Adds "roc" (rational string, "-inf", or null for Fourier), "poles" and
/// "conditions" to the rational-function fields.
json to_json(const TransformResult& r);
json to_json(const ExistenceVerdict& v);
json to_json(const ValidationReport& r);
json to_json(const FrequencyResponsePoint& p);

}  // namespace xformlab
