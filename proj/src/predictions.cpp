#include "zetalab/predictions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "zetalab/errors.hpp"
#include "zetalab/numerics/quadrature.hpp"

namespace zetalab {

namespace {

constexpr int kMaxCoefficientK = 8;

// Exact factorials; 17! is the largest needed and fits in 64 bits.
std::uint64_t exact_factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

void check_coefficient_args(int k, double a) {
  if (k < 0) throw DomainError("coefficient: k must be >= 0");
  if (k > kMaxCoefficientK) throw OverflowError("coefficient: k > 8 exceeds exact factorial range");
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("coefficient: a must be positive");
}

// (2k+1)!/x^(2k+2) - sum_{m=1}^{2k+1} m (2k)!/(2k+1-m)! e^{-x}/x^(m+1)
long double bracket(int k, long double x) {
  const long double lead = static_cast<long double>(exact_factorial(2 * k + 1)) / std::pow(x, 2 * k + 2);
  const long double two_k = static_cast<long double>(exact_factorial(2 * k));
  long double sum = 0.0L;
  for (int m = 1; m <= 2 * k + 1; ++m) {
    sum += static_cast<long double>(m) * two_k / static_cast<long double>(exact_factorial(2 * k + 1 - m)) /
           std::pow(x, m + 1);
  }
  return lead - std::exp(-x) * sum;
}

// int_x^inf t^p e^{-c t} dt
long double upper_moment(int p, long double c, long double x) {
  const long double y = c * x;
  long double term = 1.0L, sum = 1.0L;
  for (int j = 1; j <= p; ++j) {
    term *= y / j;
    sum += term;
  }
  return static_cast<long double>(exact_factorial(p)) / std::pow(c, p + 1) * std::exp(-y) * sum;
}

double lerp_grid(const FGrid& grid, double x) {
  const auto& a = grid.alphas;
  auto it = std::upper_bound(a.begin(), a.end(), x);
  std::size_t i = it == a.end() ? a.size() - 1 : static_cast<std::size_t>(it - a.begin());
  i = std::max<std::size_t>(i, 1);
  const double w = (x - a[i - 1]) / (a[i] - a[i - 1]);
  return grid.values[i - 1] + w * (grid.values[i] - grid.values[i - 1]);
}

}  // namespace

CoefficientResult coefficient_c(int k, double a) {
  check_coefficient_args(k, a);
  return {k, a, static_cast<double>(bracket(k, 2.0L * a)), CoefficientTarget::i_continuous};
}

CoefficientResult coefficient_d(int k, double a) {
  check_coefficient_args(k, a);
  const long double v = bracket(k, static_cast<long double>(a)) / (2.0L * std::numbers::pi_v<long double>);
  return {k, a, static_cast<double>(v), CoefficientTarget::d_discrete};
}

double gr_identity_residual(int k, double a) {
  check_coefficient_args(k, a);
  const long double c = 2.0L * a;
  auto inner = [k, c](long double x) { return std::pow(x, 2 * k + 1) * std::exp(-c * x); };
  auto outer = [k, c](long double x) { return std::pow(x, 2 * k) * std::exp(-c * x); };
  // Past the integrand's peak plus ~40 e-folds the analytic tail is below 1e-12 relative.
  const long double cut = std::max(2.0L, (2.0L * k + 40.0L) / c);
  const long double tol = 1e-18L;
  const auto first = numerics::integrate_adaptive<long double>(inner, 0.0L, 1.0L, tol, 1e-17L, 20000);
  long double second = 0.0L;
  for (long double lo = 1.0L; lo < cut;) {
    const long double hi = std::min(cut, lo + 4.0L / c);
    second += numerics::integrate_adaptive<long double>(outer, lo, hi, tol, 1e-17L, 20000).value;
    lo = hi;
  }
  const long double total = first.value + second + upper_moment(2 * k, c, cut);
  return static_cast<double>(std::abs(total - bracket(k, c)));
}

TauberianReport tauberian_compare(const FGrid& grid, int k, double b) {
  if (k < 0 || k > kMaxCoefficientK) throw DomainError("tauberian_compare: k must be in [0, 8]");
  if (!(b > 0.0)) throw DomainError("tauberian_compare: b must be positive");
  if (grid.alphas.size() < 2 || grid.alphas.size() != grid.values.size() || grid.alphas.front() != 0.0) {
    throw RangeError("tauberian_compare: grid must start at alpha = 0");
  }
  const double alpha_max = grid.alphas.back();
  if (alpha_max < 3.0) throw RangeError("tauberian_compare: grid must reach alpha >= 3");

  TauberianReport report;
  report.k = k;
  report.b = b;
  auto G = [k, b](double x) { return std::pow(x + 1.0, 2 * k) * std::exp(-b * x); };

  // Exact integral of the weight against the linear interpolant of F,
  // 6-point Gauss-Legendre per grid interval, starting at alpha = 1.
  static constexpr double nodes[6] = {0.033765242898423986, 0.16939530676686776, 0.38069040695840156,
                                      0.61930959304159845,  0.83060469323313224, 0.96623475710157601};
  static constexpr double weights[6] = {0.085662246189585178, 0.18038078652406930, 0.23395696728634552,
                                        0.23395696728634552,  0.18038078652406930, 0.085662246189585178};
  std::vector<double> knots{1.0};
  for (double x : grid.alphas) {
    if (x > 1.0 + 1e-12) knots.push_back(x);
  }
  double lhs = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double x0 = knots[i], x1 = knots[i + 1], h = x1 - x0;
    const double f0 = lerp_grid(grid, x0), f1 = lerp_grid(grid, x1);
    double s = 0.0;
    for (int q = 0; q < 6; ++q) {
      const double u = nodes[q];
      s += weights[q] * G(x0 + u * h - 1.0) * ((1.0 - u) * f0 + u * f1);
    }
    lhs += s * h;
  }
  report.lhs_A = lhs;

  // (alpha+1)^(2k) = sum_j C(2k,j) alpha^j
  long double full = 0.0L, cut = 0.0L, binom = 1.0L;
  const long double lb = b;
  for (int j = 0; j <= 2 * k; ++j) {
    const long double moment = static_cast<long double>(exact_factorial(j)) / std::pow(lb, j + 1);
    full += binom * moment;
    cut += binom * (moment - upper_moment(j, lb, alpha_max - 1.0));
    binom = binom * (2 * k - j) / (j + 1);
  }
  report.rhs_A = static_cast<double>(full);
  report.rhs_A_truncated = static_cast<double>(cut);

  for (auto [c, d] : {std::pair{0.0, 1.0}, std::pair{1.0, 2.0}, std::pair{0.0, 2.0}}) {
    report.window_averages.push_back({c, d, f_window_integral(grid, 1.0 + c, d - c) / (d - c)});
  }

  double running = 0.0, sup = 0.0;
  for (std::size_t i = 1; i < grid.alphas.size(); ++i) {
    running += 0.5 * (grid.alphas[i] - grid.alphas[i - 1]) * (grid.values[i] + grid.values[i - 1]);
    sup = std::max(sup, running / (grid.alphas[i] + 1.0));
  }
  report.sup_growth_ratio = sup;
  return report;
}

}  // namespace zetalab
