#pragma once

// Poisson kernel h_b(x) = b/(b^2+x^2), the companion l_b(x) = (b^2-x^2)/(b^2+x^2)^2,
// their derivatives, and the combined kernel
//   f_k(x) = Re{(-i)^k} h_b^(k)(x) + Re{(-i)^(k+1)} l_b^(k-1)(x),  b = sigma - 1/2.
// Fourier transforms use fhat(y) = int exp(-2 pi i x y) f(x) dx.

namespace zetalab {

enum class KernelFamily { h, l, f };

struct KernelSpec {
  KernelFamily family = KernelFamily::h;
  double b = 1.0;
  int deriv_order = 0;
  int k_index = 0;  // family f only; deriv_order mirrors it

  static KernelSpec poisson(double b, int n) { return {KernelFamily::h, b, n, 0}; }
  static KernelSpec companion(double b, int n) { return {KernelFamily::l, b, n, 0}; }
  static KernelSpec combined(double b, int k) { return {KernelFamily::f, b, k, k}; }
};

inline constexpr int kMaxKernelOrder = 16;

/// Throws DomainError for b <= 0, orders outside [0, 16], or a family-f spec
/// whose deriv_order differs from k_index.
void validate(const KernelSpec& spec);

double kernel_eval(const KernelSpec& spec, double x);

/// Closed-form transform. Odd-order h and l transforms are purely imaginary
/// and are not provided (UnsupportedError).
double kernel_fourier(const KernelSpec& spec, double y);

}  // namespace zetalab
