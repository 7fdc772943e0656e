#include "zetalab/pair_correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>

#include "zetalab/errors.hpp"
#include "zetalab/numerics/parallel.hpp"
#include "zetalab/numerics/quadrature.hpp"
#include "zetalab/numerics/summation.hpp"
#include "zetalab/simd/kernels.hpp"

namespace zetalab {

namespace {

constexpr std::size_t kRowBlock = 32;

std::span<const double> checked_zeros(const ZeroTable& zeros, double T) {
  if (!(T >= 50.0) || !std::isfinite(T)) throw DomainError("pair correlation needs T >= 50");
  require_coverage(zeros, T);
  return zeros.up_to(T);
}

double sinc_defect(double u) {
  const double x = std::numbers::pi * u;
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    return x2 / 3.0 - 2.0 * x2 * x2 / 45.0 + x2 * x2 * x2 / 315.0;
  }
  const double s = std::sin(x) / x;
  return 1.0 - s * s;
}

}  // namespace

double f_alpha(const ZeroTable& zeros, double T, double alpha) {
  const auto g = checked_zeros(zeros, T);
  if (!std::isfinite(alpha)) throw DomainError("f_alpha: alpha must be finite");
  const double L = std::log(T);
  const double xi = std::abs(alpha) * L;
  const std::size_t n = g.size();
  const std::size_t blocks = (n + kRowBlock - 1) / kRowBlock;
  std::vector<double> partial(blocks, 0.0);
  numerics::parallel_for(blocks, [&](std::size_t b) {
    double acc = 0.0;
    const std::size_t end = std::min(n, (b + 1) * kRowBlock);
    for (std::size_t i = b * kRowBlock; i < end; ++i) {
      acc += simd::pair_cosine_row(g[i], g.subspan(i + 1), xi);
    }
    partial[b] = acc;
  });
  const double off = numerics::pairwise_sum<double>(partial);
  return 2.0 * std::numbers::pi / (T * L) * (static_cast<double>(n) + 2.0 * off);
}

FGrid f_grid(const ZeroTable& zeros, double T, double alpha_max, double step) {
  const auto g = checked_zeros(zeros, T);
  if (!(step > 0.0) || !(alpha_max >= 0.0) || alpha_max > 8.0) {
    throw DomainError("f_grid: need step > 0 and 0 <= alpha_max <= 8");
  }
  const auto count = static_cast<std::size_t>(std::floor(alpha_max / step + 1e-9)) + 1;
  FGrid grid;
  grid.T = T;
  grid.alphas.resize(count);
  for (std::size_t m = 0; m < count; ++m) grid.alphas[m] = static_cast<double>(m) * step;

  const double L = std::log(T);
  const std::size_t n = g.size();
  const std::size_t blocks = (n + kRowBlock - 1) / kRowBlock;
  std::vector<std::vector<double>> partial(blocks);
  numerics::parallel_for(blocks, [&](std::size_t b) {
    std::vector<double> acc(count, 0.0), row(count);
    const std::size_t end = std::min(n, (b + 1) * kRowBlock);
    for (std::size_t i = b * kRowBlock; i < end; ++i) {
      simd::pair_cosine_row_sweep(g[i], g.subspan(i + 1), 0.0, step * L, row);
      for (std::size_t m = 0; m < count; ++m) acc[m] += row[m];
    }
    partial[b] = std::move(acc);
  });
  grid.values.resize(count);
  const double norm = 2.0 * std::numbers::pi / (T * L);
  std::vector<double> column(blocks);
  for (std::size_t m = 0; m < count; ++m) {
    for (std::size_t b = 0; b < blocks; ++b) column[b] = partial[b][m];
    const double off = numerics::pairwise_sum<double>(column);
    grid.values[m] = norm * (static_cast<double>(n) + 2.0 * off);
  }
  return grid;
}

double f_window_integral(const FGrid& grid, double b, double ell) {
  if (!(ell > 0.0)) throw RangeError("f_window_integral: window length must be positive");
  if (grid.alphas.size() < 2 || grid.alphas.size() != grid.values.size()) {
    throw RangeError("f_window_integral: grid has fewer than two samples");
  }
  const double lo = b, hi = b + ell;
  const double first = grid.alphas.front(), last = grid.alphas.back();
  const double slack = 1e-12 * std::max(1.0, last);
  if (lo < first - slack || hi > last + slack) throw RangeError("f_window_integral: window exceeds grid");
  const auto& a = grid.alphas;
  const auto& v = grid.values;
  auto interp = [&](double x) {
    x = std::clamp(x, first, last);
    auto it = std::upper_bound(a.begin(), a.end(), x);
    std::size_t i = it == a.end() ? a.size() - 1 : static_cast<std::size_t>(it - a.begin());
    i = std::max<std::size_t>(i, 1);
    const double w = (x - a[i - 1]) / (a[i] - a[i - 1]);
    return v[i - 1] + w * (v[i] - v[i - 1]);
  };
  const double x0 = std::clamp(lo, first, last), x1 = std::clamp(hi, first, last);
  double sum = 0.0;
  double prev_x = x0, prev_f = interp(x0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= x0) continue;
    if (a[i] >= x1) break;
    sum += 0.5 * (a[i] - prev_x) * (v[i] + prev_f);
    prev_x = a[i];
    prev_f = v[i];
  }
  sum += 0.5 * (x1 - prev_x) * (interp(x1) + prev_f);
  return sum;
}

std::int64_t pair_count(const ZeroTable& zeros, double T, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("pair_count: beta must be positive");
  if (!(T > 1.0)) throw DomainError("pair_count: T must exceed 1");
  require_coverage(zeros, T);
  const auto g = zeros.up_to(T);
  const double delta = 2.0 * std::numbers::pi * beta / std::log(T);
  std::int64_t count = 0;
  std::size_t hi = 0;
  for (std::size_t lo = 0; lo < g.size(); ++lo) {
    hi = std::max(hi, lo + 1);
    while (hi < g.size() && g[hi] - g[lo] <= delta) ++hi;
    count += static_cast<std::int64_t>(hi - lo - 1);
  }
  return count;
}

double gue_integral(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw DomainError("gue_integral: beta must be >= 0");
  if (beta == 0.0) return 0.0;
  std::vector<double> breaks{0.0};
  for (double u = 1.0; u < beta; u += 1.0) breaks.push_back(u);
  breaks.push_back(beta);
  return numerics::integrate_piecewise<double>(sinc_defect, breaks, 1e-11, 0.0).value;
}

double montgomery_asymptotic(double alpha, double T) {
  if (!(std::abs(alpha) <= 1.0)) throw DomainError("montgomery_asymptotic: needs |alpha| <= 1");
  if (!(T >= 50.0)) throw DomainError("montgomery_asymptotic: needs T >= 50");
  const double L = std::log(T);
  return std::exp(-2.0 * std::abs(alpha) * L) * L + std::abs(alpha);
}

}  // namespace zetalab
