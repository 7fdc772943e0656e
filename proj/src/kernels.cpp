#include "zetalab/kernels.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

using cplx = std::complex<double>;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// (b + ix)^(-m)
cplx inverse_power(double b, double x, int m) {
  const cplx z = 1.0 / cplx(b, x);
  cplx p = 1.0;
  for (int i = 0; i < m; ++i) p *= z;
  return p;
}

// (-1)^n i^n = (-i)^n
cplx minus_i_power(int n) {
  static const cplx cycle[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return cycle[n % 4];
}

double h_derivative(double b, int n, double x) {
  return (factorial(n) * minus_i_power(n) * inverse_power(b, x, n + 1)).real();
}

double l_derivative(double b, int n, double x) {
  return (factorial(n + 1) * minus_i_power(n) * inverse_power(b, x, n + 2)).real();
}

double sign_even(int n) { return (n / 2) % 2 == 0 ? 1.0 : -1.0; }  // (-1)^(n/2), n even

}  // namespace

void validate(const KernelSpec& spec) {
  if (!(spec.b > 0.0) || !std::isfinite(spec.b)) throw DomainError("kernel width b must be positive");
  if (spec.deriv_order < 0 || spec.deriv_order > kMaxKernelOrder) {
    throw DomainError("kernel derivative order must be in [0, 16]");
  }
  if (spec.family == KernelFamily::f && spec.deriv_order != spec.k_index) {
    throw DomainError("combined kernel: derivative order is fixed by k");
  }
  if (spec.family != KernelFamily::f && spec.k_index != 0) {
    throw DomainError("k_index applies to the combined kernel only");
  }
}

double kernel_eval(const KernelSpec& spec, double x) {
  validate(spec);
  const int n = spec.deriv_order;
  switch (spec.family) {
    case KernelFamily::h:
      return h_derivative(spec.b, n, x);
    case KernelFamily::l:
      return l_derivative(spec.b, n, x);
    case KernelFamily::f:
      // Only one term survives: h^(k) for even k, l^(k-1) for odd k.
      if (n % 2 == 0) return sign_even(n) * h_derivative(spec.b, n, x);
      return sign_even(n + 1) * l_derivative(spec.b, n - 1, x);
  }
  return 0.0;
}

double kernel_fourier(const KernelSpec& spec, double y) {
  validate(spec);
  const int n = spec.deriv_order;
  const double pi = std::numbers::pi;
  const double decay = std::exp(-2.0 * pi * spec.b * std::abs(y));
  switch (spec.family) {
    case KernelFamily::h:
      if (n % 2 != 0) throw UnsupportedError("odd-order transforms of h are not provided");
      // (2 pi i y)^n * pi e^{-2 pi b|y|}
      return sign_even(n) * std::pow(2.0, n) * std::pow(pi, n + 1) * std::pow(y, n) * decay;
    case KernelFamily::l:
      if (n % 2 != 0) throw UnsupportedError("odd-order transforms of l are not provided");
      return sign_even(n) * std::pow(2.0 * pi, n) * std::pow(y, n) * 2.0 * pi * pi * std::abs(y) * decay;
    case KernelFamily::f: {
      // (Re{i^k})^2 y^k + (Re{i^(k+1)})^2 y^(k-1)|y|, times (-1)^k 2^k pi^(k+1) e^{-2 pi b|y|}
      const double poly = n % 2 == 0 ? std::pow(y, n) : std::pow(y, n - 1) * std::abs(y);
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      return sign * poly * std::pow(2.0, n) * std::pow(pi, n + 1) * decay;
    }
  }
  return 0.0;
}

}  // namespace zetalab
