#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_util.hpp"
#include "xformlab/errors.hpp"
#include "xformlab/ode.hpp"
#include "xformlab/transform.hpp"

using namespace xformlab;

namespace {

std::vector<GaussianRational> g(std::initializer_list<long> v) {
  std::vector<GaussianRational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

RationalExpr rat(std::initializer_list<GaussianRational> num, std::initializer_list<GaussianRational> den,
                 Var v = Var::S) {
  return {ExactPolynomial{num}, ExactPolynomial{den}, v};
}

}  // namespace

TEST_CASE("parse_ode examples") {
  LinearODE a = parse_ode("y'' + 3*y' + 2*y = u' + u");
  CHECK(a.out_coeffs == g({2, 3, 1}));
  CHECK(a.in_coeffs == g({1, 1}));
  LinearODE b = parse_ode("y = u");
  CHECK(b.out_coeffs == g({1}));
  CHECK(b.in_coeffs == g({1}));
  try {
    parse_ode("y'' + = u");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("parse_ode notation") {
  LinearODE a = parse_ode("y^(4) - 1/2*y^2 + 2*i*y = 3/4*u^(3) - u");
  CHECK(a.out_coeffs ==
        std::vector<GaussianRational>{GaussianRational{0, 2}, 0, GaussianRational{frac(-1, 2)}, 0, 1});
  CHECK(a.in_coeffs == std::vector<GaussianRational>{-1, 0, 0, GaussianRational{frac(3, 4)}});
  CHECK(parse_ode("y' = 0").in_coeffs == g({0}));
  CHECK(parse_ode("y' + y' = u/2").out_coeffs == g({0, 2}));
  CHECK(parse_ode("y*2 + y' = (1 + i)*u").in_coeffs == std::vector<GaussianRational>{GaussianRational{1, 1}});
  CHECK(parse_ode("y = u'' + 0*u'''").in_coeffs == g({0, 0, 1}));
}

TEST_CASE("parse_ode files with params and comments") {
  const char* text =
      "# suspension\n"
      "param M = 2\n"
      "param b = 3/2\n"
      "param k = 2*b\n"
      "\n"
      "M*y'' + b*y' + k*y = b*u' + k*u\n";
  LinearODE ode = parse_ode(text);
  CHECK(ode.out_coeffs == std::vector<GaussianRational>{3, GaussianRational{frac(3, 2)}, 2});
  CHECK(ode.in_coeffs == std::vector<GaussianRational>{3, GaussianRational{frac(3, 2)}});
  try {
    parse_ode("# header\nparam R = 1\ny' + Q*y = u\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("parse_ode errors") {
  CHECK_THROWS_AS(parse_ode(""), SyntaxError);
  CHECK_THROWS_AS(parse_ode("# only a comment\n"), SyntaxError);
  CHECK_THROWS_AS(parse_ode("y = u\ny = u"), SyntaxError);
  CHECK_THROWS_AS(parse_ode("0*y'' + y = u"), ZeroLeadingCoefficient);
  CHECK_THROWS_AS(parse_ode("y'' - y'' + y = u"), ZeroLeadingCoefficient);
  CHECK_THROWS_AS(parse_ode("y = y"), SyntaxError);
  CHECK_THROWS_AS(parse_ode("u = u"), SyntaxError);
  CHECK_THROWS_AS(parse_ode("y^(10) = u"), SyntaxError);
  CHECK_THROWS_AS(parse_ode("y/y = u"), SyntaxError);
  CHECK_THROWS_AS(parse_ode("y*y = u"), SyntaxError);
  CHECK_THROWS_AS(parse_ode("y + 3 = u"), SyntaxError);
  CHECK_THROWS_AS(parse_ode("y = u/0"), SyntaxError);
  CHECK_THROWS_AS(parse_ode("param y = 2\ny = u"), SyntaxError);
}

TEST_CASE("print_ode canonical text") {
  CHECK(print_ode(make_ode(g({2, 3, 1}), g({1, 1}))) == "y'' + 3*y' + 2*y = u' + u");
  CHECK(print_ode(make_ode(g({-1, 0, 0, 1}), g({0}))) == "y^(3) - y = 0");
  LinearODE c = make_ode({GaussianRational{frac(1, 2), frac(-3)}, GaussianRational{0, 1}}, {-2});
  CHECK(print_ode(c) == "(1*i)*y' + (1/2-3*i)*y = -2*u");
  CHECK(parse_ode(print_ode(c)) == c);
}

TEST_CASE("print then parse round-trips random ODEs") {
  std::mt19937_64 rng{17};
  std::uniform_int_distribution<int> order(0, 9), num(-9, 9), den(1, 6), zero(0, 3);
  auto coeff = [&] {
    if (zero(rng) == 0) return GaussianRational{0};
    return GaussianRational{frac(num(rng), den(rng)), zero(rng) == 1 ? frac(num(rng), den(rng)) : Rational{0}};
  };
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<GaussianRational> out(static_cast<std::size_t>(order(rng)) + 1);
    std::vector<GaussianRational> in(static_cast<std::size_t>(order(rng)) + 1);
    for (auto& c : out) c = coeff();
    for (auto& c : in) c = coeff();
    if (out.back().is_zero()) out.back() = 1;
    LinearODE ode = make_ode(out, in);
    const std::string text = print_ode(ode);
    INFO(text);
    CHECK(parse_ode(text) == ode);
    CHECK(print_ode(parse_ode(text)) == text);
  }
}

TEST_CASE("transfer_function examples") {
  CHECK(rational_equal(transfer_function(make_ode(g({2, 3, 1}), g({1, 1}))), rat({1, 1}, {2, 3, 1})));
  CHECK(rational_equal(transfer_function(make_ode(g({1}), g({1}))), rat({1}, {1})));
  CHECK_THROWS_AS(transfer_function(make_ode(g({1, 1}), g({1}), false)), NonzeroInitialConditions);
  CHECK_THROWS_AS(make_ode(g({1, 0}), g({1})), ZeroLeadingCoefficient);
  CHECK_THROWS_AS(make_ode({}, g({1})), std::invalid_argument);
}

TEST_CASE("frequency_response examples and bridge coherence") {
  CHECK(rational_equal(frequency_response(make_ode(g({2, 3, 1}), g({1, 1}))), rat({1, 1}, {2, 3, 1}, Var::IOmega)));
  CHECK(rational_equal(frequency_response(make_ode(g({1}), g({1}))), rat({1}, {1}, Var::IOmega)));
  std::mt19937_64 rng{23};
  std::uniform_int_distribution<int> order(0, 5), num(-9, 9), den(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<GaussianRational> out(static_cast<std::size_t>(order(rng)) + 1), in(static_cast<std::size_t>(order(rng)) + 1);
    for (auto& c : out) c = GaussianRational{frac(num(rng), den(rng))};
    for (auto& c : in) c = GaussianRational{frac(num(rng), den(rng))};
    if (out.back().is_zero()) out.back() = 1;
    LinearODE ode = make_ode(out, in);
    CHECK(rational_equal(frequency_response(ode), transfer_function(ode).relabel(Var::IOmega)));
  }
}

TEST_CASE("bode_grid examples") {
  for (const auto& p : bode_grid(rat({1}, {1}, Var::IOmega), 0.1, 100.0, 7)) {
    CHECK(p.magnitude == doctest::Approx(1.0));
    CHECK(p.magnitude_db == doctest::Approx(0.0));
    CHECK(p.phase_rad == doctest::Approx(0.0));
  }
  FrequencyResponsePoint a = response_at(rat({1}, {1, 1}, Var::IOmega), 1.0);
  CHECK(a.magnitude == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(a.phase_rad == doctest::Approx(-std::numbers::pi / 4).epsilon(1e-12));
  auto grid = bode_grid(rat({1}, {0, 1}, Var::IOmega), 1.0, 10.0, 5);
  CHECK(grid.front().omega == 1.0);
  CHECK(grid.back().omega == 10.0);
  CHECK(grid.front().magnitude == doctest::Approx(1.0));
  CHECK(grid.front().phase_rad == doctest::Approx(-std::numbers::pi / 2));
  CHECK(grid[2].omega == doctest::Approx(std::sqrt(10.0)));
}

TEST_CASE("bode_grid rejects poles and bad ranges") {
  // 1/((iw)^2 + 4) has poles at w = ±2
  CHECK_THROWS_AS(bode_grid(rat({1}, {4, 0, 1}, Var::IOmega), 1.0, 3.0, 10), PoleError);
  CHECK_NOTHROW(bode_grid(rat({1}, {4, 0, 1}, Var::IOmega), 2.5, 3.0, 10));
  CHECK_THROWS_AS(bode_grid(rat({1}, {1, 1}, Var::IOmega), 0.0, 3.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(bode_grid(rat({1}, {1, 1}, Var::IOmega), 3.0, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(bode_grid(rat({1}, {1, 1}, Var::IOmega), 1.0, 3.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(bode_grid(rat({1}, {1, 1}), 1.0, 3.0, 4), VarMismatch);
  CHECK(is_improper(rat({0, 0, 1}, {1, 1}, Var::IOmega)));
  CHECK_FALSE(is_improper(rat({1}, {1, 1}, Var::IOmega)));
}

TEST_CASE("first-order low-pass magnitude falls monotonically") {
  auto grid = bode_grid(rat({1}, {1, 1}, Var::IOmega), 1.0, 1000.0, 50);
  for (std::size_t k = 1; k < grid.size(); ++k) CHECK(grid[k].magnitude_db < grid[k - 1].magnitude_db);
}

TEST_CASE("time-domain responses match H(s) times the input transform") {
  struct Pair {
    LinearODE ode;
    SignalExpr u;
    SignalExpr y;
  };
  const Rational third = frac(1, 3);
  const Rational fifth = frac(1, 5);
  std::vector<Pair> pairs{
      {make_ode(g({2, 3, 1}), g({1, 1})), causal(0, -5), scale(third, causal(0, -2)) + scale(Rational{-third}, causal(0, -5))},
      {make_ode(g({1, 1}), g({1})), causal(0, -2), causal(0, -1) + scale(-1, causal(0, -2))},
      {make_ode(g({4, 0, 1}), g({1})), causal(0, -1),
       scale(fifth, causal(0, -1)) + scale(Rational{-fifth}, causal(0, 0, {OscKind::Cos, 2})) +
           scale(frac(1, 10), causal(0, 0, {OscKind::Sin, 2}))},
  };
  for (const auto& p : pairs) {
    CHECK(rational_equal(laplace_symbolic(p.y).expr, transfer_function(p.ode) * laplace_symbolic(p.u).expr));
  }
}
