#include <algorithm>
#include <cmath>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/simd/kernels.hpp"

namespace zetalab::simd::scalar {

namespace {

inline double montgomery_weight(double u) { return 4.0 / (4.0 + u * u); }

void check_line_args(std::span<const double> log_n, std::span<const double> amplitude,
                     std::size_t steps, std::size_t orders, std::span<std::complex<double>> out) {
  if (amplitude.size() != log_n.size() || out.size() < steps * orders) {
    throw DomainError("dirichlet_line_sums: inconsistent buffer sizes");
  }
}

}  // namespace

void dirichlet_power_sums(std::span<const double> log_n, double sigma, double t,
                          std::span<std::complex<double>> out) {
  const std::size_t orders = out.size();
  std::vector<double> re(orders, 0.0), im(orders, 0.0);
  for (double L : log_n) {
    const double amp = std::exp(-sigma * L);
    double zr = amp * std::cos(t * L);
    double zi = -amp * std::sin(t * L);
    for (std::size_t j = 0; j < orders; ++j) {
      re[j] += zr;
      im[j] += zi;
      zr *= L;
      zi *= L;
    }
  }
  for (std::size_t j = 0; j < orders; ++j) out[j] = {re[j], im[j]};
}

void dirichlet_line_sums(std::span<const double> log_n, std::span<const double> amplitude,
                         double t0, double dt, std::size_t steps, std::size_t orders,
                         std::span<std::complex<double>> out) {
  check_line_args(log_n, amplitude, steps, orders, out);
  std::vector<double> re(steps * orders, 0.0), im(steps * orders, 0.0);
  for (std::size_t start = 0; start < steps; start += kLineResync) {
    const std::size_t stop = std::min(steps, start + kLineResync);
    const double t_start = t0 + static_cast<double>(start) * dt;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
      const double L = log_n[i];
      double er = amplitude[i] * std::cos(t_start * L);
      double ei = -amplitude[i] * std::sin(t_start * L);
      const double rr = std::cos(dt * L);
      const double ri = -std::sin(dt * L);
      for (std::size_t m = start; m < stop; ++m) {
        double zr = er, zi = ei;
        for (std::size_t j = 0; j < orders; ++j) {
          re[m * orders + j] += zr;
          im[m * orders + j] += zi;
          zr *= L;
          zi *= L;
        }
        const double nr = er * rr - ei * ri;
        ei = er * ri + ei * rr;
        er = nr;
      }
    }
  }
  for (std::size_t q = 0; q < steps * orders; ++q) out[q] = {re[q], im[q]};
}

double pair_cosine_row(double base, std::span<const double> others, double xi) {
  double sum = 0.0;
  for (double g : others) {
    const double u = g - base;
    sum += montgomery_weight(u) * std::cos(xi * u);
  }
  return sum;
}

void pair_cosine_row_sweep(double base, std::span<const double> others, double xi0, double dxi,
                           std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  const std::size_t steps = out.size();
  for (std::size_t start = 0; start < steps; start += kLineResync) {
    const std::size_t stop = std::min(steps, start + kLineResync);
    const double xi_start = xi0 + static_cast<double>(start) * dxi;
    for (double g : others) {
      const double u = g - base;
      const double w = montgomery_weight(u);
      double c = w * std::cos(xi_start * u);
      double s = w * std::sin(xi_start * u);
      const double rc = std::cos(dxi * u);
      const double rs = std::sin(dxi * u);
      for (std::size_t m = start; m < stop; ++m) {
        out[m] += c;
        const double nc = c * rc - s * rs;
        s = c * rs + s * rc;
        c = nc;
      }
    }
  }
}

std::complex<double> poisson_power_row(double base, std::span<const double> others, double scale,
                                       double b, int power) {
  if (power < 1) throw DomainError("poisson_power_row: power must be >= 1");
  double sr = 0.0, si = 0.0;
  for (double g : others) {
    const double u = g - base;
    const double x = scale * u;
    // 1/(b + ix) = (b - ix)/(b^2 + x^2)
    const double d = 1.0 / (b * b + x * x);
    const double zr = b * d;
    const double zi = -x * d;
    double pr = zr, pi = zi;
    for (int p = 1; p < power; ++p) {
      const double nr = pr * zr - pi * zi;
      pi = pr * zi + pi * zr;
      pr = nr;
    }
    const double w = montgomery_weight(u);
    sr += w * pr;
    si += w * pi;
  }
  return {sr, si};
}

}  // namespace zetalab::simd::scalar
