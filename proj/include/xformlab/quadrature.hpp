#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "xformlab/errors.hpp"
#include "xformlab/gaussian_rational.hpp"

namespace xformlab {

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_depth = 50;
  /// Fixed truncation point for improper integrals; nullopt picks it from the
  /// existence certificate.
  std::optional<double> truncation_b;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw std::invalid_argument("tolerances must be positive");
    if (max_depth < 10) throw std::invalid_argument("max_depth must be at least 10");
    if (truncation_b && !(*truncation_b > 0.0)) throw std::invalid_argument("truncation point must be positive");
  }
};

namespace detail {

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

struct PanelEstimate {
  Complex value;
  double err_re;
  double err_im;
  double abs_mass;  ///< Kronrod estimate of ∫|g| over the panel
};

/// 7-point Gauss / 15-point Kronrod pair on [a, b].
template <typename F>
PanelEstimate gauss_kronrod15(const F& g, double a, double b) {
  static constexpr std::array<double, 8> xgk = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
  static constexpr std::array<double, 8> wgk = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  // Gauss weights for the odd-indexed Kronrod nodes xgk[1], xgk[3], xgk[5], xgk[7]
  static constexpr std::array<double, 4> wg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                               0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const Complex fc = g(center);
  Complex kronrod = wgk[7] * fc;
  Complex gauss = wg[3] * fc;
  double mass = wgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * xgk[static_cast<std::size_t>(j)];
    const Complex left = g(center - dx);
    const Complex right = g(center + dx);
    kronrod += wgk[static_cast<std::size_t>(j)] * (left + right);
    mass += wgk[static_cast<std::size_t>(j)] * (std::abs(left) + std::abs(right));
    if (j % 2 == 1) gauss += wg[static_cast<std::size_t>(j / 2)] * (left + right);
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::abs(kronrod.real() - gauss.real()), std::abs(kronrod.imag() - gauss.imag()), mass * half};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of a complex integrand over
/// [lo, hi]. Real and imaginary parts each have their summed error estimate
/// held below max(abs_tol, rel_tol·|value|), or below the rounding floor
/// 50·ε·∫|g| when cancellation makes the relative target unreachable. When `panel_width` > 0 the
/// interval is first cut into panels of that width starting at `lo` (the
/// last one shorter). Throws ToleranceNotMet when a panel needing refinement
/// has already been bisected `max_depth` times.
template <typename F>
Complex integrate_adaptive(const F& g, double lo, double hi, const QuadratureConfig& cfg, double panel_width = 0.0) {
  cfg.validate();
  if (!(lo < hi)) throw std::invalid_argument("integration bounds must satisfy lo < hi");

  struct Panel {
    double a;
    double b;
    int depth;
    detail::PanelEstimate est;
    double badness() const { return std::max(est.err_re, est.err_im); }
  };
  auto worse = [](const Panel& x, const Panel& y) { return x.badness() < y.badness(); };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> heap(worse);

  Complex total{0.0, 0.0};
  double err_re = 0.0;
  double err_im = 0.0;
  double mass = 0.0;
  auto push = [&](double a, double b, int depth) {
    Panel p{a, b, depth, detail::gauss_kronrod15(g, a, b)};
    total += p.est.value;
    mass += p.est.abs_mass;
    err_re += p.est.err_re;
    err_im += p.est.err_im;
    heap.push(p);
  };

  if (panel_width > 0.0 && (hi - lo) > panel_width) {
    const auto count = static_cast<long>(std::ceil((hi - lo) / panel_width));
    for (long k = 0; k < count; ++k) {
      const double a = lo + static_cast<double>(k) * panel_width;
      const double b = std::min(hi, a + panel_width);
      if (b > a) push(a, b, 0);
    }
  } else {
    push(lo, hi, 0);
  }

  constexpr std::size_t kMaxPanels = 1'000'000;
  constexpr double kRoundoff = 50.0 * std::numeric_limits<double>::epsilon();
  for (;;) {
    const double tol = std::max({cfg.abs_tol, cfg.rel_tol * std::abs(total), kRoundoff * mass});
    if (err_re <= tol && err_im <= tol) {
      // re-sum to shed drift from the incremental updates
      auto copy = heap;
      Complex exact_total{0.0, 0.0};
      double exact_re = 0.0;
      double exact_im = 0.0;
      double exact_mass = 0.0;
      while (!copy.empty()) {
        exact_total += copy.top().est.value;
        exact_mass += copy.top().est.abs_mass;
        exact_re += copy.top().est.err_re;
        exact_im += copy.top().est.err_im;
        copy.pop();
      }
      total = exact_total;
      err_re = exact_re;
      err_im = exact_im;
      mass = exact_mass;
      const double exact_tol = std::max({cfg.abs_tol, cfg.rel_tol * std::abs(total), kRoundoff * mass});
      if (err_re <= exact_tol && err_im <= exact_tol) return total;
    }
    Panel worst = heap.top();
    if (worst.depth >= cfg.max_depth || heap.size() >= kMaxPanels) {
      throw ToleranceNotMet("adaptive quadrature reached its depth limit with error estimate " +
                            detail::format_double(std::max(err_re, err_im)) + " above tolerance " + detail::format_double(tol));
    }
    heap.pop();
    total -= worst.est.value;
    mass -= worst.est.abs_mass;
    err_re -= worst.est.err_re;
    err_im -= worst.est.err_im;
    const double mid = 0.5 * (worst.a + worst.b);
    push(worst.a, mid, worst.depth + 1);
    push(mid, worst.b, worst.depth + 1);
  }
}

}  // namespace xformlab
