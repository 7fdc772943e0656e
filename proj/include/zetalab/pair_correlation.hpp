#pragma once

// Montgomery's pair correlation function
//   F(alpha, T) = 2pi/(T log T) * sum_{0<g,g'<=T} T^{i alpha (g-g')} w(g-g'),  w(u) = 4/(4+u^2)
// and related pair statistics.

#include <cstdint>
#include <string_view>
#include <vector>

#include "zetalab/zero_catalog.hpp"

namespace zetalab {

inline constexpr std::string_view kMontgomeryWeightId = "w(u)=4/(4+u^2)";

inline double montgomery_weight(double u) { return 4.0 / (4.0 + u * u); }

struct FGrid {
  double T = 0.0;
  std::vector<double> alphas;
  std::vector<double> values;
  std::string_view weight_id = kMontgomeryWeightId;
};

/// Full double sum over ordinates <= T (no pair cutoff). Requires T >= 50.
double f_alpha(const ZeroTable& zeros, double T, double alpha);

/// F sampled at alpha = 0, step, ..., alpha_max (alpha_max <= 8).
FGrid f_grid(const ZeroTable& zeros, double T, double alpha_max, double step);

/// Trapezoid integral of the sampled F over [b, b + ell].
double f_window_integral(const FGrid& grid, double b, double ell);

/// Ordered pairs with 0 < g - g' <= 2 pi beta / log T.
std::int64_t pair_count(const ZeroTable& zeros, double T, double beta);

/// int_0^beta 1 - (sin(pi u)/(pi u))^2 du.
double gue_integral(double beta);

/// T^{-2|alpha|} log T + |alpha|, for |alpha| <= 1.
double montgomery_asymptotic(double alpha, double T);

}  // namespace zetalab
