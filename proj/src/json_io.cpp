#include "xformlab/json_io.hpp"

#include <cmath>

namespace xformlab {

namespace {

json coeff_list(const ExactPolynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  if (arr.empty()) arr.push_back("0");
  return arr;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json to_json(Complex z) { return {{"re", finite_or_null(z.real())}, {"im", finite_or_null(z.imag())}}; }

json to_json(const RationalExpr& f) {
  return {{"var", to_string(f.var())}, {"num", coeff_list(f.num())}, {"den", coeff_list(f.den())}, {"expr", to_string(f)}};
}

json to_json(const TransformResult& r) {
  json j = to_json(r.expr);
  if (!r.is_laplace()) {
    j["roc"] = nullptr;
  } else if (r.roc) {
    j["roc"] = to_string(*r.roc);
  } else {
    j["roc"] = "-inf";
  }
  json poles = json::array();
  for (const auto& p : r.poles) poles.push_back(to_string(p));
  j["poles"] = std::move(poles);
  j["conditions"] = r.conditions;
  return j;
}

json to_json(const ExistenceVerdict& v) {
  switch (v.kind) {
    case VerdictKind::LaplaceExists:
      return {{"kind", "laplace_exists"}, {"M", v.cert.M}, {"a", v.cert.a}};
    case VerdictKind::FourierExists:
      return {{"kind", "fourier_exists"}};
    case VerdictKind::Fails:
      break;
  }
  return {{"kind", "fails"}, {"reason", v.reason}};
}

json to_json(const ValidationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"property", f.property},
                        {"inputs", f.inputs},
                        {"lhs", f.lhs},
                        {"rhs", f.rhs},
                        {"delta", finite_or_null(f.delta)}});
  }
  json per_property = json::object();
  for (const auto& [name, count] : r.per_property) per_property[name] = count;
  return {{"suite", r.suite},
          {"seed", r.seed},
          {"cases_run", r.cases_run},
          {"per_property", std::move(per_property)},
          {"passed", r.passed()},
          {"failures", std::move(failures)}};
}

json to_json(const FrequencyResponsePoint& p) {
  return {{"omega", p.omega}, {"magnitude", p.magnitude}, {"magnitude_db", p.magnitude_db}, {"phase_rad", p.phase_rad}};
}

}  // namespace xformlab
