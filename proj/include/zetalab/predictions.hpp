#pragma once

// Predicted leading coefficients of I_k and D_k, the Gamma-integral identity
// behind them, and a side-by-side comparator for the Tauberian equivalence
//   int_0^inf F(alpha+1) G(alpha) e^{-b alpha} d alpha ~ int_0^inf G(alpha) e^{-b alpha} d alpha
//   <=>  window averages of F(alpha+1) ~ 1.

#include <vector>

#include "zetalab/pair_correlation.hpp"

namespace zetalab {

enum class CoefficientTarget { i_continuous, d_discrete };

struct CoefficientResult {
  int k = 0;
  double a = 0.0;
  double value = 0.0;
  CoefficientTarget target = CoefficientTarget::i_continuous;
};

/// (2k+1)!/(2a)^(2k+2) - sum_{m=1}^{2k+1} m (2k)!/(2k+1-m)! e^{-2a}/(2a)^(m+1), k <= 8.
CoefficientResult coefficient_c(int k, double a);

/// (1/2pi) [(2k+1)!/a^(2k+2) - sum_m m (2k)!/(2k+1-m)! e^{-a}/a^(m+1)], k <= 8.
CoefficientResult coefficient_d(int k, double a);

/// |int_0^1 x^(2k+1) e^{-2ax} + int_1^inf x^(2k) e^{-2ax} - coefficient_c(k,a)|,
/// with both integrals done by quadrature (the far tail analytically).
double gr_identity_residual(int k, double a);

struct WindowAverage {
  double c = 0.0;
  double d = 0.0;
  double average = 0.0;
};

struct TauberianReport {
  int k = 0;
  double b = 0.0;
  /// int_0^{alpha_max-1} F(alpha+1)(alpha+1)^(2k) e^{-b alpha} d alpha
  double lhs_A = 0.0;
  /// int_0^inf (alpha+1)^(2k) e^{-b alpha} d alpha
  double rhs_A = 0.0;
  /// The same integral cut at alpha_max - 1, the like-for-like partner of lhs_A.
  double rhs_A_truncated = 0.0;
  std::vector<WindowAverage> window_averages;
  /// sup over grid points beta of (int_0^beta F) / (beta + 1).
  double sup_growth_ratio = 0.0;
};

/// Needs a grid from alpha = 0 reaching alpha >= 3.
TauberianReport tauberian_compare(const FGrid& grid, int k, double b);

}  // namespace zetalab
