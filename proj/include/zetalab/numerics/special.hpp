#pragma once

#include <complex>

namespace zetalab::numerics {

/// B_{2r} / (2r)! for r >= 1 (r <= 150).
double bernoulli_over_factorial(int r);

/// Principal-branch log Gamma for Re z > 0, continuous along vertical lines.
std::complex<double> log_gamma(std::complex<double> z);

/// Digamma psi(z) for Re z > 0.
std::complex<double> digamma(std::complex<double> z);

/// Polygamma psi^(m)(z) for m >= 1 and Re z > 0.
std::complex<double> polygamma(int m, std::complex<double> z);

}  // namespace zetalab::numerics
