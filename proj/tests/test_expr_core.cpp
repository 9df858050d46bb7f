#include <doctest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"
#include "xformlab/errors.hpp"
#include "xformlab/rational_expr.hpp"
#include "xformlab/signal_expr.hpp"

using namespace xformlab;

namespace {

RationalExpr rat(std::initializer_list<GaussianRational> num, std::initializer_list<GaussianRational> den,
                 Var v = Var::S) {
  return {ExactPolynomial{num}, ExactPolynomial{den}, v};
}

GaussianRational q(long p, long d = 1) { return Rational{p, d}; }

}  // namespace

TEST_CASE("gaussian rational arithmetic is exact") {
  GaussianRational a{Rational{1, 3}, Rational{2, 7}};
  GaussianRational b{Rational{-5, 2}, Rational{1, 9}};
  CHECK((a * b) / b == a);
  CHECK((a + b) - b == a);
  CHECK(a * a.conj() == GaussianRational{a.norm()});
  CHECK_THROWS_AS(a / GaussianRational{0}, std::domain_error);
  CHECK(to_string(GaussianRational{Rational{1, 2}, Rational{-3, 4}}) == "1/2-3/4 i");
  CHECK(to_string(GaussianRational::i()) == "1 i");
}

TEST_CASE("polynomial division and gcd") {
  ExactPolynomial a{-4, 0, 1};  // s^2 - 4
  ExactPolynomial b{-2, 1};
  auto [quot, rem] = divmod(a, b);
  CHECK(quot == ExactPolynomial{2, 1});
  CHECK(rem.is_zero());
  CHECK(gcd(a, ExactPolynomial{2, 1}) == ExactPolynomial{2, 1});
  CHECK(gcd(ExactPolynomial{1, 1}, ExactPolynomial{2, 1}) == ExactPolynomial{1});
  CHECK(ExactPolynomial{0, 0}.is_zero());
  CHECK(ExactPolynomial{1, 2, 0}.degree() == 1);
}

TEST_CASE("polynomial roots from the companion matrix") {
  auto r = roots(to_float(ExactPolynomial{2, 3, 1}));
  REQUIRE(r.size() == 2);
  double lo = std::min(r[0].real(), r[1].real());
  double hi = std::max(r[0].real(), r[1].real());
  CHECK(lo == doctest::Approx(-2.0));
  CHECK(hi == doctest::Approx(-1.0));
}

TEST_CASE("eval_signal examples") {
  CHECK(eval_signal(unit_step(), -1.0) == Complex{0.0, 0.0});
  CHECK(eval_signal(causal(0, -1), 0.0) == Complex{1.0, 0.0});
  Complex v = eval_signal(causal(1, -1, {OscKind::Cos, 2}), 1.0);
  CHECK(v.real() == doctest::Approx(std::exp(-1.0) * std::cos(2.0)).epsilon(1e-12));
  CHECK(v.real() == doctest::Approx(-0.153093).epsilon(1e-5));
  CHECK(v.imag() == 0.0);
}

TEST_CASE("eval_rational examples") {
  CHECK(eval_rational(rat({1}, {0, 1}), {2.0, 0.0}) == Complex{0.5, 0.0});
  CHECK_THROWS_AS(eval_rational(rat({1}, {1, 1}), {-1.0, 0.0}), PoleError);
  // removable singularity at 2 disappears after canonicalization
  RationalExpr f = rat({-4, 0, 1}, {-2, 1});
  CHECK(f.den() == ExactPolynomial{1});
  CHECK(eval_rational(f, {2.0, 0.0}).real() == doctest::Approx(4.0));
}

TEST_CASE("rational_equal examples") {
  CHECK(rational_equal(rat({1}, {0, 1}), rat({2}, {0, 2})));
  CHECK(rational_equal(rat({1, 1}, {1, 2, 1}), rat({1}, {1, 1})));
  CHECK_FALSE(rational_equal(rat({1}, {0, 1}), rat({1}, {1, 1})));
  CHECK_THROWS_AS(rational_equal(rat({1}, {0, 1}), rat({1}, {0, 1}, Var::IOmega)), VarMismatch);
}

TEST_CASE("canonical form: monic denominator, idempotent") {
  RationalExpr f = rat({2, 4}, {6, 2});
  CHECK(f.den().leading() == GaussianRational{1});
  RationalExpr g{f.num(), f.den(), f.var()};
  CHECK(g == f);
  CHECK(to_string(rat({1, 1}, {2, 3, 1})) == "1/(s + 2)");
  CHECK(to_string(rat({1, 1}, {2, 3, 1}, Var::IOmega)) == "1/((iw) + 2)");
  CHECK(rat({0}, {3, 1}).den() == ExactPolynomial{1});
  CHECK_THROWS_AS(rat({1}, {0}), std::domain_error);
}

TEST_CASE("rational_equal is an equivalence relation on random triples") {
  std::mt19937_64 rng{11};
  std::uniform_int_distribution<long> d(-4, 4);
  auto poly = [&](int deg) {
    std::vector<GaussianRational> c;
    for (int k = 0; k <= deg; ++k) c.emplace_back(frac(d(rng)), frac(d(rng)));
    if (c.back().is_zero()) c.back() = 1;
    return ExactPolynomial{c};
  };
  for (int trial = 0; trial < 100; ++trial) {
    ExactPolynomial n = poly(2), m = poly(2), k = poly(1);
    if (m.is_zero() || k.is_zero()) continue;
    RationalExpr f{n, m, Var::S};
    RationalExpr g{n * k, m * k, Var::S};
    RationalExpr h{GaussianRational{3} * n * k, GaussianRational{3} * m * k, Var::S};
    CHECK(rational_equal(f, f));
    CHECK(rational_equal(f, g) == rational_equal(g, f));
    CHECK(rational_equal(f, g));
    CHECK(rational_equal(g, h));
    CHECK(rational_equal(f, h));
    CHECK(f == g);
  }
}

TEST_CASE("differentiate examples") {
  CHECK(differentiate(causal(0, -1)) == normalize(scale(-1, causal(0, -1))));
  SignalExpr expect = normalize(causal(0, -1) + scale(-1, causal(1, -1)));
  CHECK(differentiate(causal(1, -1)) == expect);
  CHECK_THROWS_AS(differentiate(two_sided(0, -1)), NonDifferentiable);
  CHECK_THROWS_AS(two_sided(0, 0), InvalidSignal);
  CHECK_THROWS_AS(sum({}), InvalidSignal);
}

TEST_CASE("evaluation is linear and respects time reversal") {
  std::mt19937_64 rng{5};
  std::uniform_real_distribution<double> tdist(-5.0, 5.0);
  SignalExpr f = causal(2, GaussianRational{Rational{-1, 2}, Rational{1}}, {OscKind::Sin, 3});
  SignalExpr g = two_sided(1, -2, {OscKind::Cos, Rational{1, 2}});
  for (int k = 0; k < 200; ++k) {
    const double t = tdist(rng);
    CHECK(std::abs(eval_signal(f + g, t) - (eval_signal(f, t) + eval_signal(g, t))) <= 1e-12);
    CHECK(std::abs(eval_signal(reverse(f), t) - eval_signal(f, -t)) <= 1e-12);
  }
}

TEST_CASE("differentiate agrees with central differences") {
  std::mt19937_64 rng{9};
  std::uniform_real_distribution<double> tdist(0.1, 6.0);
  std::uniform_int_distribution<int> deg(0, 3), num(-3, 3), den(1, 3), osc(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    Oscillation o{static_cast<OscKind>(osc(rng)), frac(std::abs(num(rng)), den(rng))};
    SignalExpr f = scale(GaussianRational{frac(num(rng), den(rng)), frac(num(rng), den(rng))},
                         causal(static_cast<unsigned>(deg(rng)), frac(-std::abs(num(rng)), den(rng)), o)) +
                   reverse(causal(1, -1));
    SignalExpr df = differentiate(f);
    const double t = tdist(rng);
    const double h = 1e-6 * (1.0 + std::abs(t));
    Complex fd = (eval_signal(f, t + h) - eval_signal(f, t - h)) / (2.0 * h);
    CHECK(std::abs(eval_signal(df, t) - fd) <= 1e-5);
  }
}

TEST_CASE("antiderivative and one-sided values") {
  SignalExpr f = causal(0, -1);
  SignalExpr F = antiderivative(f);
  CHECK(std::abs(eval_signal(F, 2.0) - Complex{1.0 - std::exp(-2.0), 0.0}) < 1e-14);
  CHECK(value_at_zero_plus(F) == GaussianRational{0});
  CHECK(value_at_zero_plus(causal(0, 3) + reverse(causal(0, -1))) == GaussianRational{1});
  CHECK(value_at_zero_minus(causal(0, 3) + reverse(causal(0, -1))) == GaussianRational{1});
  CHECK_THROWS_AS(antiderivative(two_sided(0, -1)), NonCausalInput);
  CHECK(is_causal(causal(1, 2)));
  CHECK_FALSE(is_causal(reverse(causal(1, 2))));
  CHECK(is_causal(causal(0, -1) + scale(0, two_sided(0, -1))));
}
