#include <doctest.h>

#include <cmath>

#include "xformlab/errors.hpp"
#include "xformlab/existence.hpp"

using namespace xformlab;

TEST_CASE("exp_order_cert examples") {
  ExpOrderCert c = exp_order_cert(causal(0, -1));
  CHECK(c.M == 1.0);
  CHECK(c.a == doctest::Approx(-1.0 + 1.0 / 16.0));
  CHECK_FALSE(falsify_exp_order(causal(0, -1), c).has_value());

  ExpOrderCert u = exp_order_cert(unit_step());
  CHECK(u.M == 1.0);
  CHECK(u.a == doctest::Approx(1.0 / 16.0));

  SignalExpr f = scale(5, causal(1, 2));
  ExpOrderCert g = exp_order_cert(f);
  CHECK(g.a == doctest::Approx(2.0 + 1.0 / 16.0));
  // 5 * 1/(e/16)
  CHECK(g.M == doctest::Approx(5.0 * 16.0 / std::exp(1.0)));
  CHECK(g.M == doctest::Approx(29.43).epsilon(1e-3));
  CHECK_FALSE(falsify_exp_order(f, g).has_value());
}

TEST_CASE("falsify_exp_order catches a bad claim") {
  CHECK(falsify_exp_order(causal(0, 1), ExpOrderCert{1.0, 0.5}).has_value());
}

TEST_CASE("laplace_exists examples") {
  ExistenceVerdict v = laplace_exists(causal(0, -1), {0.5, 0.0});
  CHECK(v.kind == VerdictKind::LaplaceExists);
  ExistenceVerdict w = laplace_exists(unit_step(), {0.01, 0.0});
  CHECK(w.kind == VerdictKind::Fails);
  CHECK(w.reason.find("Re s <= a") != std::string::npos);
  CHECK_FALSE(laplace_exists(causal(0, 2), {1.0, 0.0}).holds());
  CHECK_THROWS_AS(laplace_exists(two_sided(0, -1), {1.0, 0.0}), NonCausalInput);
  CHECK_THROWS_AS(laplace_exists(reverse(causal(0, -1)), {1.0, 0.0}), NonCausalInput);
}

TEST_CASE("laplace_exists is monotone in Re s") {
  SignalExpr f = causal(2, GaussianRational{Rational{-1, 3}, Rational{2}}, {OscKind::Cos, 1});
  for (double re = -1.0; re < 2.0; re += 0.01) {
    if (laplace_exists(f, {re, 3.0}).holds()) {
      CHECK(laplace_exists(f, {re + 0.37, -1.0}).holds());
    }
  }
}

TEST_CASE("fourier_exists examples") {
  CHECK(fourier_exists(two_sided(0, -1)).kind == VerdictKind::FourierExists);
  ExistenceVerdict u = fourier_exists(unit_step());
  CHECK(u.kind == VerdictKind::Fails);
  CHECK(u.reason.find("not absolutely integrable on [0,") != std::string::npos);
  CHECK(fourier_exists(causal(0, -1, {OscKind::Cos, 3})).holds());
  ExistenceVerdict r = fourier_exists(reverse(causal(0, 1)));
  CHECK_FALSE(r.holds());
  CHECK(r.reason.find("(-") != std::string::npos);
  CHECK(fourier_exists(reverse(causal(0, -1))).holds());
}

TEST_CASE("half-line and whole-line fourier existence agree") {
  std::vector<SignalExpr> fs{unit_step(),
                             causal(0, -1),
                             two_sided(2, -1),
                             reverse(causal(0, 1)),
                             reverse(causal(1, -1)) + causal(0, Rational{1, 2}),
                             causal(0, GaussianRational{0, 1}),
                             scale(0, causal(0, 1)),
                             causal(3, Rational{-1, 100}, {OscKind::Sin, 4})};
  for (const auto& f : fs) CHECK(fourier_exists(f).holds() == fourier_exists_whole_line(f).holds());
}

TEST_CASE("half_line_decay certificates bound the signal") {
  SignalExpr f = causal(2, -1) + reverse(causal(0, -3)) + two_sided(1, -2, {OscKind::Cos, 5});
  DecayCert pos = half_line_decay(f, HalfLine::Positive);
  DecayCert neg = half_line_decay(f, HalfLine::Negative);
  for (double t = 0.0; t < 60.0; t += 0.05) {
    CHECK(std::abs(eval_signal(f, t)) <= pos.M * std::exp(-pos.rate * t) * (1 + 1e-12));
    CHECK(std::abs(eval_signal(f, -t)) <= neg.M * std::exp(-neg.rate * t) * (1 + 1e-12));
  }
  CHECK(half_line_decay(causal(0, -1), HalfLine::Negative).empty);
  CHECK_THROWS_AS(half_line_decay(unit_step(), HalfLine::Positive), NotAbsolutelyIntegrable);
}
