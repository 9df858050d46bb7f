#include "xformlab/case_studies.hpp"

#include <sstream>
#include <stdexcept>

#include "xformlab/errors.hpp"

namespace xformlab {

namespace {

void require_positive(const Rational& v, const char* name) {
  if (sgn(v) <= 0) throw NonPositiveParameter(std::string{"parameter "} + name + " must be positive, got " + to_string(v));
}

GaussianRational g(const Rational& q) { return GaussianRational{q}; }

}  // namespace

CaseStudy ltc_model(const LtcParams& p) {
  require_positive(p.R, "R");
  require_positive(p.L, "L");
  require_positive(p.C, "C");
  const Rational inv_lc = 1 / (p.L * p.C);
  const Rational two_rc = 2 / (p.R * p.C);
  LinearODE ode = make_ode({g(inv_lc), g(-two_rc), 1}, {g(-inv_lc), 0, 1});
  // (s² − 1/(LC)) / (1/(LC) − (2/(RC))·s + s²)
  RationalExpr expected{ExactPolynomial{g(-inv_lc), 0, 1}, ExactPolynomial{g(inv_lc), g(-two_rc), 1}, Var::S};
  return {std::move(ode), std::move(expected)};
}

CaseStudy suspension_model(const SuspensionParams& p) {
  require_positive(p.M, "M");
  require_positive(p.b, "b");
  require_positive(p.k, "k");
  LinearODE ode = make_ode({g(p.k), g(p.b), g(p.M)}, {g(p.k), g(p.b)});
  const Rational b_m = p.b / p.M;
  const Rational k_m = p.k / p.M;
  // ((b/M)·iω + k/M) / (k/M + (b/M)·iω + (iω)²)
  RationalExpr expected{ExactPolynomial{g(k_m), g(b_m)}, ExactPolynomial{g(k_m), g(b_m), 1}, Var::IOmega};
  return {std::move(ode), std::move(expected)};
}

CaseStudy sallen_key_model(const SallenKeyParams& p) {
  require_positive(p.R1, "R1");
  require_positive(p.R2, "R2");
  require_positive(p.C1, "C1");
  require_positive(p.C2, "C2");
  const Rational a2 = p.R1 * p.C1 * p.R2 * p.C2;
  const Rational a1 = p.C2 * (p.R1 + p.R2);
  LinearODE ode = make_ode({1, g(a1), g(a2)}, {1});
  RationalExpr expected{ExactPolynomial{1}, ExactPolynomial{1, g(a1), g(a2)}, Var::S};
  return {std::move(ode), std::move(expected)};
}

std::string export_case(const std::string& model, const std::map<std::string, Rational>& params) {
  struct Template {
    std::vector<std::string> names;
    std::string title;
    std::string equation;
  };
  static const std::map<std::string, Template> templates{
      {"ltc", {{"R", "L", "C"}, "linear transfer converter", "y'' - 2/(R*C)*y' + 1/(L*C)*y = u'' - 1/(L*C)*u"}},
      {"suspension", {{"M", "b", "k"}, "automobile suspension", "M*y'' + b*y' + k*y = b*u' + k*u"}},
      {"sallen-key",
       {{"R1", "R2", "C1", "C2"}, "second-order Sallen-Key low-pass filter", "R1*C1*R2*C2*y'' + C2*(R1 + R2)*y' + y = u"}},
  };
  auto it = templates.find(model);
  if (it == templates.end()) throw std::invalid_argument("unknown model '" + model + "'");
  const Template& tpl = it->second;
  for (const auto& [name, value] : params) {
    if (std::find(tpl.names.begin(), tpl.names.end(), name) == tpl.names.end()) {
      throw std::invalid_argument("model '" + model + "' has no parameter '" + name + "'");
    }
    require_positive(value, name.c_str());
  }
  std::ostringstream os;
  os << "# " << tpl.title << "\n";
  for (const auto& name : tpl.names) {
    auto p = params.find(name);
    os << "param " << name << " = " << (p == params.end() ? std::string{"1"} : to_string(p->second)) << "\n";
  }
  os << tpl.equation << "\n";
  return os.str();
}

}  // namespace xformlab
