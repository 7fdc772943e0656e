#pragma once

// Second moments of (zeta'/zeta)^(k) on the line sigma = 1/2 + a/log T,
//   I_k(a,T) = int_1^T |(zeta'/zeta)^(k)(sigma + it)|^2 dt,
// computed three ways, and the discrete sums
//   D_k(a,T) = sum_{0<g<=T} (zeta'/zeta)^(2k)(sigma + ig).

#include <vector>

#include "zetalab/pair_correlation.hpp"
#include "zetalab/zero_catalog.hpp"

namespace zetalab {

enum class MomentKind { i_quadrature, i_zero_pairs, i_from_f, d_discrete };

struct MomentEstimate {
  MomentKind kind = MomentKind::i_quadrature;
  int k = 0;
  double a = 0.0;
  double T = 0.0;
  double value = 0.0;
  double err_estimate = 0.0;
  /// Imaginary part of the discrete sum (d_k only).
  double imag_part = 0.0;
  /// Number of integrand samples or terms behind the value.
  long long samples = 0;
};

struct QuadratureOptions {
  /// Refinement factor on windows around zeros.
  int refine = 16;
  /// Multiplier on the base step.
  double step_scale = 1.0;
};

/// Direct Simpson quadrature of |(zeta'/zeta)^(k)|^2 for every k in [0, kmax],
/// sharing one pass of zeta evaluations. The zero table only places the fine
/// mesh windows. Throws PrecisionError when step halving disagrees by > 5%.
std::vector<MomentEstimate> i_k_quadrature_all(int kmax, double a, double T, const ZeroTable& zeros,
                                               const QuadratureOptions& options = {});
MomentEstimate i_k_quadrature(int k, double a, double T, const ZeroTable& zeros,
                              const QuadratureOptions& options = {});

/// Zero-pair representation with the Poisson kernel (h_{a/pi})^(2k).
MomentEstimate i_k_from_zeros(int k, double a, double T, const ZeroTable& zeros);

/// Representation through Montgomery's F on a sampled grid.
MomentEstimate i_k_from_f(int k, double a, double T, const FGrid& grid);

/// Real part of the discrete sum. The imaginary part is kept in imag_part and
/// its magnitude is also added to err_estimate.
MomentEstimate d_k(int k, double a, double T, const ZeroTable& zeros);

/// i_quad / (2 pi d), with DivisionError when |d| is within its error of 0.
double farmer_ratio(const MomentEstimate& i_quad, const MomentEstimate& d);
double farmer_ratio(int k, double a, double T, const ZeroTable& zeros);

/// Mean-value term of the explicit formula,
///   M(t) = Re psi(s/2 + 1)/2 - log(pi)/2 + Re 1/(s - 1),  s = sigma + it,
/// so that Re zeta'/zeta(s) = sum_rho Re 1/(s - rho) - M(t).
double explicit_formula_mean(double sigma, double t);

}  // namespace zetalab
