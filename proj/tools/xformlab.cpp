#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "xformlab/case_studies.hpp"
#include "xformlab/errors.hpp"
#include "xformlab/json_io.hpp"
#include "xformlab/ode.hpp"
#include "xformlab/oracle.hpp"
#include "xformlab/signal_syntax.hpp"
#include "xformlab/transform.hpp"
#include "xformlab/validation.hpp"

using namespace xformlab;

namespace {

enum Exit : int {
  kOk = 0,
  kFailed = 1,
  kParse = 2,
  kExistence = 3,
  kLeadingCoefficient = 4,
  kPole = 5,
};

struct Globals {
  QuadratureConfig quad;
  std::optional<double> trunc;
  std::optional<std::uint64_t> seed;
  std::string output;
};

/// Exit-code carrying error raised by the command handlers.
struct CommandError {
  int code;
  std::string message;
};

std::uint64_t resolve_seed(const Globals& g) {
  if (g.seed) return *g.seed;
  if (const char* env = std::getenv("XFORMLAB_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string{env}.size()) return v;
    } catch (const std::exception&) {
    }
    throw CommandError{kParse, std::string{"XFORMLAB_SEED is not an unsigned integer: '"} + env + "'"};
  }
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in{path, std::ios::binary};
  if (!in) throw CommandError{kParse, "cannot read file '" + path + "'"};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LinearODE load_ode(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_ode(text);
  } catch (const SyntaxError& e) {
    throw CommandError{kParse, path + ": " + e.what()};
  } catch (const ZeroLeadingCoefficient& e) {
    throw CommandError{kLeadingCoefficient, path + ": " + e.what()};
  }
}

std::string output_format(const Globals& g, const std::string& fallback) {
  const std::string f = g.output.empty() ? fallback : g.output;
  if (f != "json" && f != "csv") throw CommandError{kParse, "unknown output format '" + f + "'"};
  return f;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

/// Roots sorted by real then imaginary part, for stable output.
std::vector<Complex> sorted_roots(const ExactPolynomial& p) {
  if (p.degree() <= 0) return {};
  auto r = roots(to_float(p));
  std::sort(r.begin(), r.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return r;
}

int cmd_transform(const Globals& g, const std::string& kind, const std::string& text, const std::optional<std::string>& at) {
  SignalExpr f;
  try {
    f = parse_signal(text);
  } catch (const SyntaxError& e) {
    throw CommandError{kParse, e.what()};
  } catch (const InvalidSignal& e) {
    throw CommandError{kParse, e.what()};
  }
  std::optional<GaussianRational> point;
  if (at) {
    try {
      point = parse_gaussian(*at);
    } catch (const SyntaxError& e) {
      throw CommandError{kParse, std::string{"--at: "} + e.what()};
    }
    if (kind == "fourier" && !point->is_real()) throw CommandError{kParse, "--at must be a real frequency for fourier"};
  }

  const bool laplace = kind == "laplace";
  json out;
  out["kind"] = kind;
  out["signal"] = print_signal(f);
  try {
    TransformResult r;
    if (laplace) {
      r = laplace_symbolic(f);
      const ExpOrderCert cert = exp_order_cert(f);
      out["existence"] = to_json(ExistenceVerdict{VerdictKind::LaplaceExists, cert, {}});
    } else {
      const ExistenceVerdict v = fourier_exists(f);
      if (!v.holds()) throw CommandError{kExistence, v.reason};
      r = fourier_symbolic(f);
      out["existence"] = to_json(v);
    }
    const json fields = to_json(r);
    for (const auto& [key, value] : fields.items()) out[key] = value;
    if (point) {
      const Complex z = point->to_complex();
      Complex symbolic;
      Complex oracle;
      if (laplace) {
        const ExistenceVerdict v = laplace_exists(f, z);
        if (!v.holds()) throw CommandError{kExistence, v.reason};
        symbolic = eval_rational_exact(r.expr, z);
        oracle = laplace_numeric(f, z, g.quad);
      } else {
        symbolic = eval_rational_exact(r.expr, Complex{0.0, z.real()});
        oracle = fourier_numeric(f, z.real(), g.quad);
      }
      out["at"] = to_string(*point);
      out["symbolic"] = to_json(symbolic);
      out["oracle"] = to_json(oracle);
      out["delta"] = std::abs(symbolic - oracle);
    }
  } catch (const NonCausalInput& e) {
    throw CommandError{kExistence, e.what()};
  } catch (const NotAbsolutelyIntegrable& e) {
    throw CommandError{kExistence, e.what()};
  } catch (const DivergentTransform& e) {
    throw CommandError{kExistence, e.what()};
  } catch (const PoleError& e) {
    throw CommandError{kPole, e.what()};
  }
  print_json(out);
  return kOk;
}

int cmd_analyze(const Globals& g, const std::string& path) {
  const LinearODE ode = load_ode(path);
  const std::string format = output_format(g, "json");
  const RationalExpr h = transfer_function(ode);
  const auto poles = sorted_roots(h.den());
  const auto zeros = sorted_roots(h.num());
  if (format == "csv") {
    std::cout << "kind,re,im\n";
    std::cout.precision(17);
    for (const auto& p : poles) std::cout << "pole," << p.real() << "," << p.imag() << "\n";
    for (const auto& z : zeros) std::cout << "zero," << z.real() << "," << z.imag() << "\n";
    return kOk;
  }
  json out;
  out["equation"] = print_ode(ode);
  out["order"] = ode.order();
  out["transfer_function"] = to_json(h);
  out["frequency_response"] = to_json(frequency_response(ode));
  if (poles.empty()) {
    out["roc"] = "-inf";
  } else {
    double right = poles.front().real();
    for (const auto& p : poles) right = std::max(right, p.real());
    out["roc"] = right;
  }
  json pj = json::array();
  for (const auto& p : poles) pj.push_back(to_json(p));
  json zj = json::array();
  for (const auto& z : zeros) zj.push_back(to_json(z));
  out["poles"] = std::move(pj);
  out["zeros"] = std::move(zj);
  out["approximate"] = true;
  out["improper"] = is_improper(h);
  out["conditions"] = json::array({"zero initial conditions", "causal input and output (Re s > roc)"});
  print_json(out);
  return kOk;
}

int cmd_respond(const Globals& g, const std::string& path, double wmin, double wmax, int points) {
  const LinearODE ode = load_ode(path);
  const std::string format = output_format(g, "csv");
  const RationalExpr h = frequency_response(ode);
  if (is_improper(h)) std::cerr << "warning: improper transfer function, |H| grows without bound with frequency\n";
  std::vector<FrequencyResponsePoint> grid;
  try {
    grid = bode_grid(h, wmin, wmax, points);
  } catch (const PoleError& e) {
    throw CommandError{kPole, e.what()};
  } catch (const std::invalid_argument& e) {
    throw CommandError{kParse, e.what()};
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& p : grid) arr.push_back(to_json(p));
    print_json({{"frequency_response", to_json(h)}, {"grid", std::move(arr)}});
    return kOk;
  }
  std::cout << "omega,magnitude,magnitude_db,phase_rad\n";
  std::cout.precision(17);
  for (const auto& p : grid) std::cout << p.omega << "," << p.magnitude << "," << p.magnitude_db << "," << p.phase_rad << "\n";
  return kOk;
}

std::map<std::string, Rational> parse_params(const std::string& text) {
  std::map<std::string, Rational> out;
  std::stringstream ss{text};
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw CommandError{kParse, "expected NAME=VALUE in --params, got '" + item + "'"};
    std::string name = item.substr(0, eq);
    name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
    GaussianRational v;
    try {
      v = parse_gaussian(item.substr(eq + 1));
    } catch (const SyntaxError& e) {
      throw CommandError{kParse, "parameter " + name + ": " + e.what()};
    }
    if (!v.is_real()) throw CommandError{kParse, "parameter " + name + " must be real"};
    out[name] = v.re();
  }
  return out;
}

int cmd_case_export(const std::string& name, const std::string& params) {
  try {
    std::cout << export_case(name, parse_params(params));
  } catch (const NonPositiveParameter& e) {
    throw CommandError{kParse, e.what()};
  } catch (const std::invalid_argument& e) {
    throw CommandError{kParse, e.what()};
  }
  return kOk;
}

int cmd_validate(const Globals& g, const std::string& suite, int n) {
  const std::uint64_t seed = resolve_seed(g);
  ValidationReport report;
  try {
    report = run_suite(suite, seed, n, g.quad);
  } catch (const std::invalid_argument& e) {
    throw CommandError{kParse, e.what()};
  }
  print_json(to_json(report));
  return report.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Laplace/Fourier transforms with a numerical oracle"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  double rel_tol = g.quad.rel_tol;
  double abs_tol = g.quad.abs_tol;
  app.add_option("--rel-tol", rel_tol, "relative quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--abs-tol", abs_tol, "absolute quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--trunc", g.trunc, "fixed truncation point for improper integrals")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "random seed (falls back to XFORMLAB_SEED, then 0)");
  app.add_option("--output", g.output, "output format")->check(CLI::IsMember({"json", "csv"}));

  std::string kind;
  std::string signal;
  std::optional<std::string> at;
  auto* transform = app.add_subcommand("transform", "symbolic transform of a signal, optionally checked at a point");
  transform->add_option("--kind", kind, "laplace or fourier")->required()->check(CLI::IsMember({"laplace", "fourier"}));
  transform->add_option("--signal", signal, "signal in the textual syntax")->required();
  transform->add_option("--at", at, "evaluation point: complex s for laplace, real w for fourier");

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "transfer function, frequency response, poles and zeros of an ODE");
  analyze->add_option("file", file, "ODE file")->required();

  double wmin = 0.01;
  double wmax = 100.0;
  int points = 100;
  auto* respond = app.add_subcommand("respond", "Bode grid of an ODE's frequency response");
  respond->add_option("file", file, "ODE file")->required();
  respond->add_option("--wmin", wmin, "lowest angular frequency");
  respond->add_option("--wmax", wmax, "highest angular frequency");
  respond->add_option("--points", points, "number of log-spaced points");

  std::string model;
  std::string params;
  auto* cases = app.add_subcommand("case", "case-study models");
  cases->require_subcommand(1);
  auto* exporter = cases->add_subcommand("export", "write a model as an ODE file to stdout");
  exporter->add_option("name", model, "ltc, suspension or sallen-key")->required();
  exporter->add_option("--params", params, "comma-separated NAME=VALUE list");

  std::string suite;
  int n = 100;
  auto* validate = app.add_subcommand("validate", "run a randomized property suite");
  validate->add_option("--suite", suite, "table2, table3, bridge, case-studies or oracle")->required();
  validate->add_option("--n", n, "number of randomized rounds")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  g.quad.rel_tol = rel_tol;
  g.quad.abs_tol = abs_tol;
  g.quad.truncation_b = g.trunc;
  try {
    if (*transform) return cmd_transform(g, kind, signal, at);
    if (*analyze) return cmd_analyze(g, file);
    if (*respond) return cmd_respond(g, file, wmin, wmax, points);
    if (*exporter) return cmd_case_export(model, params);
    if (*validate) return cmd_validate(g, suite, n);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kFailed;
}
