#include <doctest.h>

#include <cmath>
#include <set>

#include "xformlab/json_io.hpp"
#include "xformlab/signal_syntax.hpp"
#include "xformlab/validation.hpp"

using namespace xformlab;

TEST_CASE("suite names") {
  const auto& names = suite_names();
  CHECK(std::set<std::string>(names.begin(), names.end()) ==
        std::set<std::string>{"table2", "table3", "bridge", "case-studies", "oracle"});
}

TEST_CASE("case-studies suite counts one case per model per round") {
  const ValidationReport r = run_suite("case-studies", 7, 50);
  CHECK(r.cases_run == 150);
  CHECK(r.per_property.at("ltc") == 50);
  CHECK(r.per_property.at("suspension") == 50);
  CHECK(r.per_property.at("sallen_key") == 50);
  CHECK(r.passed());
}

TEST_CASE("zero rounds are vacuous") {
  for (const auto& s : suite_names()) {
    const ValidationReport r = run_suite(s, 0, 0);
    CHECK(r.cases_run == 0);
    CHECK(r.passed());
  }
}

TEST_CASE("bad suite arguments") {
  CHECK_THROWS_AS(run_suite("laplace", 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("table2", 0, -1), std::invalid_argument);
}

TEST_CASE("every suite passes a short run") {
  for (const auto& s : suite_names()) {
    CAPTURE(s);
    const ValidationReport r = run_suite(s, 3, 10);
    CHECK(r.cases_run > 0);
    for (const auto& f : r.failures) {
      INFO(f.property << " " << f.inputs << " " << f.lhs << " vs " << f.rhs);
      CHECK(false);
    }
  }
}

TEST_CASE("reports are reproducible from the seed") {
  const std::string a = to_json(run_suite("table3", 11, 15)).dump();
  const std::string b = to_json(run_suite("table3", 11, 15)).dump();
  CHECK(a == b);
  CHECK(a != to_json(run_suite("table3", 12, 15)).dump());
}

TEST_CASE("sampled signals respect their contracts") {
  std::mt19937_64 rng{5};
  SignalSampler s{rng};
  for (int k = 0; k < 200; ++k) {
    CHECK(is_causal(s.laplace_signal()));
    CHECK(fourier_exists(s.fourier_signal()).holds());
    const SignalExpr c = s.fourier_causal_signal();
    CHECK(is_causal(c));
    CHECK(fourier_exists(c).holds());
  }
}

TEST_CASE("catalog entries parse to their stored signal") {
  CHECK(signal_catalog().size() >= 12);
  for (const auto& e : signal_catalog()) {
    CAPTURE(e.name);
    CHECK(parse_signal(e.text) == e.signal);
  }
}

TEST_CASE("json serialization of verdicts and results") {
  const json ok = to_json(ExistenceVerdict{VerdictKind::LaplaceExists, {2.0, -0.5}, {}});
  CHECK(ok.dump() == R"({"kind":"laplace_exists","M":2.0,"a":-0.5})");
  CHECK(to_json(fourier_exists(parse_signal("causal(1)")))["kind"] == "fails");

  ValidationReport r;
  r.suite = "table2";
  r.failures.push_back({"p", "x", "1", "2", std::nan("")});
  const json j = to_json(r);
  CHECK(j["failures"][0]["delta"].is_null());
  CHECK(j["passed"] == false);
}
