#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "zetalab/errors.hpp"

namespace zetalab::numerics {

template <class Real>
struct QuadratureResult {
  Real value{};
  Real abs_error{};
  int intervals = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<long double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L};
inline constexpr std::array<long double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
inline constexpr std::array<long double, 4> kGaussWeights = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

template <class Real>
struct Panel {
  Real a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class Real, class F>
Panel<Real> kronrod_panel(F& f, Real a, Real b) {
  const Real center = (a + b) / 2;
  const Real half = (b - a) / 2;
  const Real fc = f(center);
  Real kronrod = fc * static_cast<Real>(kKronrodWeights[7]);
  Real gauss = fc * static_cast<Real>(kGaussWeights[3]);
  for (int j = 0; j < 7; ++j) {
    const Real dx = half * static_cast<Real>(kKronrodNodes[j]);
    const Real pair = f(center - dx) + f(center + dx);
    kronrod += static_cast<Real>(kKronrodWeights[j]) * pair;
    if (j % 2 == 1) gauss += static_cast<Real>(kGaussWeights[j / 2]) * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on a finite interval.
/// Bisects the panel with the largest error estimate until the summed error
/// meets max(abs_tol, rel_tol*|value|). Throws PrecisionError when the panel
/// budget runs out first.
template <class Real, class F>
QuadratureResult<Real> integrate_adaptive(F&& f, Real a, Real b, Real abs_tol,
                                          Real rel_tol = Real(0), int max_panels = 4000) {
  if (a == b) return {Real(0), Real(0), 0};
  std::vector<detail::Panel<Real>> heap;
  heap.push_back(detail::kronrod_panel<Real>(f, a, b));
  Real value = heap.front().value;
  Real error = heap.front().error;
  while (!(error <= std::max(abs_tol, rel_tol * std::abs(value)))) {
    if (!std::isfinite(value) || !std::isfinite(error)) {
      throw PrecisionError("adaptive quadrature met a non-finite integrand value");
    }
    if (static_cast<int>(heap.size()) >= max_panels) {
      throw PrecisionError("adaptive quadrature did not converge within the panel budget");
    }
    std::pop_heap(heap.begin(), heap.end());
    const auto worst = heap.back();
    heap.pop_back();
    const Real mid = (worst.a + worst.b) / 2;
    const auto left = detail::kronrod_panel<Real>(f, worst.a, mid);
    const auto right = detail::kronrod_panel<Real>(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());
  }
  // Final totals are re-summed in interval order so the result does not
  // depend on the running updates.
  std::sort(heap.begin(), heap.end(),
            [](const auto& x, const auto& y) { return x.a < y.a; });
  value = Real(0);
  error = Real(0);
  for (const auto& p : heap) {
    value += p.value;
    error += p.error;
  }
  return {value, error, static_cast<int>(heap.size())};
}

/// Integrates over [a, b] split at the given interior break points.
template <class Real, class F>
QuadratureResult<Real> integrate_piecewise(F&& f, std::span<const Real> points, Real abs_tol,
                                           Real rel_tol = Real(0), int max_panels = 4000) {
  QuadratureResult<Real> total;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const auto part = integrate_adaptive<Real>(f, points[i], points[i + 1],
                                               abs_tol / static_cast<Real>(points.size() - 1),
                                               rel_tol, max_panels);
    total.value += part.value;
    total.abs_error += part.abs_error;
    total.intervals += part.intervals;
  }
  return total;
}

/// Composite Simpson rule on equally spaced samples; y.size() must be odd.
inline double simpson_uniform(std::span<const double> y, double step) {
  if (y.size() < 3 || y.size() % 2 == 0) {
    throw DomainError("simpson_uniform needs an odd number (>= 3) of samples");
  }
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) (i % 2 == 1 ? odd : even) += y[i];
  return step / 3.0 * (y.front() + 4.0 * odd + 2.0 * even + y.back());
}

}  // namespace zetalab::numerics
