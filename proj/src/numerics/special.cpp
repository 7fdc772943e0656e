#include "zetalab/numerics/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "zetalab/errors.hpp"

namespace zetalab::numerics {

namespace {

constexpr int kMaxBernoulliIndex = 150;

// B_{2r}/(2r)! = (-1)^(r+1) 2 zeta(2r) / (2 pi)^(2r). Exact rationals for the
// first ten keep the small-index values free of summation error.
std::array<double, kMaxBernoulliIndex + 1> make_bernoulli_table() {
  std::array<double, kMaxBernoulliIndex + 1> table{};
  const std::array<std::pair<double, double>, 10> exact = {{
      {1.0, 6.0},
      {-1.0, 30.0},
      {1.0, 42.0},
      {-1.0, 30.0},
      {5.0, 66.0},
      {-691.0, 2730.0},
      {7.0, 6.0},
      {-3617.0, 510.0},
      {43867.0, 798.0},
      {-174611.0, 330.0},
  }};
  long double factorial = 1.0L;
  for (int r = 1; r <= 10; ++r) {
    factorial *= static_cast<long double>((2 * r - 1) * (2 * r));
    const long double b = static_cast<long double>(exact[r - 1].first) / exact[r - 1].second;
    table[r] = static_cast<double>(b / factorial);
  }
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (int r = 11; r <= kMaxBernoulliIndex; ++r) {
    long double zeta = 0.0L;
    for (int n = 30; n >= 1; --n) zeta += std::pow(static_cast<long double>(n), -2.0L * r);
    const long double magnitude = 2.0L * zeta * std::pow(two_pi, -2.0L * r);
    table[r] = static_cast<double>(r % 2 == 1 ? magnitude : -magnitude);
  }
  return table;
}

const std::array<double, kMaxBernoulliIndex + 1>& bernoulli_table() {
  static const auto table = make_bernoulli_table();
  return table;
}

constexpr double kShiftRadius = 16.0;

}  // namespace

double bernoulli_over_factorial(int r) {
  if (r < 1 || r > kMaxBernoulliIndex) throw DomainError("bernoulli index out of range");
  return bernoulli_table()[r];
}

std::complex<double> log_gamma(std::complex<double> z) {
  if (!(z.real() > 0.0)) throw DomainError("log_gamma requires Re z > 0");
  // Shift right until Stirling's series is accurate; Re(z+j) > 0 keeps each
  // principal log on the continuous branch.
  std::complex<double> shift{0.0, 0.0};
  while (std::abs(z) < kShiftRadius) {
    shift += std::log(z);
    z += 1.0;
  }
  const std::complex<double> inv = 1.0 / z;
  const std::complex<double> inv2 = inv * inv;
  // sum_k B_{2k} / (2k (2k-1) z^{2k-1}); B_{2k}/(2k(2k-1)) = (2k-2)! * B_{2k}/(2k)!.
  std::complex<double> series{0.0, 0.0};
  std::complex<double> power = inv;
  double factorial = 1.0;  // (2k-2)!
  for (int k = 1; k <= 10; ++k) {
    if (k > 1) factorial *= static_cast<double>((2 * k - 3) * (2 * k - 2));
    series += factorial * bernoulli_over_factorial(k) * power;
    power *= inv2;
  }
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (z - 0.5) * std::log(z) - z + half_log_two_pi + series - shift;
}

std::complex<double> digamma(std::complex<double> z) {
  if (!(z.real() > 0.0)) throw DomainError("digamma requires Re z > 0");
  std::complex<double> shift{0.0, 0.0};
  while (std::abs(z) < kShiftRadius) {
    shift += 1.0 / z;
    z += 1.0;
  }
  const std::complex<double> inv = 1.0 / z;
  const std::complex<double> inv2 = inv * inv;
  // psi(z) ~ log z - 1/(2z) - sum_k B_{2k} / (2k z^{2k}).
  std::complex<double> series{0.0, 0.0};
  std::complex<double> power = inv2;
  double factorial = 1.0;  // (2k-1)!
  for (int k = 1; k <= 10; ++k) {
    if (k > 1) factorial *= static_cast<double>((2 * k - 2) * (2 * k - 1));
    series += factorial * bernoulli_over_factorial(k) * power;
    power *= inv2;
  }
  return std::log(z) - 0.5 * inv - series - shift;
}

std::complex<double> polygamma(int m, std::complex<double> z) {
  if (m < 1) throw DomainError("polygamma order must be >= 1");
  if (!(z.real() > 0.0)) throw DomainError("polygamma requires Re z > 0");
  double m_factorial = 1.0;
  for (int j = 2; j <= m; ++j) m_factorial *= j;
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^(m+1)
  // psi^(m)(z) = psi^(m)(z+1) + (-1)^(m+1) m! / z^(m+1)
  std::complex<double> shift{0.0, 0.0};
  const double radius = kShiftRadius + 2.0 * m;
  while (std::abs(z) < radius) {
    shift += sign * m_factorial * std::pow(z, -(m + 1));
    z += 1.0;
  }
  // psi^(m)(z) ~ (-1)^(m+1) [ (m-1)!/z^m + m!/(2 z^(m+1))
  //                          + sum_k B_{2k} (2k+m-1)! / ((2k)! z^(2k+m)) ]
  const std::complex<double> inv = 1.0 / z;
  const std::complex<double> inv2 = inv * inv;
  std::complex<double> power = std::pow(inv, m);
  std::complex<double> series = (m_factorial / m) * power + 0.5 * m_factorial * power * inv;
  power *= inv2;
  double rising = m_factorial;  // (2k+m-1)! for k = 1 is (m+1)!
  rising *= (m + 1);
  for (int k = 1; k <= 12; ++k) {
    if (k > 1) rising *= static_cast<double>((2 * k + m - 2) * (2 * k + m - 1));
    series += bernoulli_over_factorial(k) * rising * power;
    power *= inv2;
  }
  return sign * series + shift;
}

}  // namespace zetalab::numerics
