#pragma once

// Riemann zeta function and its derivatives by Euler-Maclaurin summation.
//
// Two derivative paths are provided:
//   zeta_derivatives  - Cauchy integral over a circle around s (default)
//   zeta_taylor       - Taylor coefficients of the Euler-Maclaurin formula itself
// They are independent enough to serve as oracles for each other.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace zetalab {

struct ComplexEval {
  std::complex<double> value;
  double abs_error = 0.0;
};

struct EvalPoint {
  double sigma = 0.0;
  double t = 0.0;
  std::complex<double> s() const { return {sigma, t}; }
};

inline constexpr int kMaxZetaOrder = 12;
inline constexpr int kMaxLogDerivativeOrder = 8;
inline constexpr double kMaxHeight = 1.0e4;

/// Main-sum length used by the Euler-Maclaurin backend at height t.
std::size_t euler_maclaurin_terms(double t);

/// zeta(s) alone, for any s != 1 with |Im s| <= kMaxHeight + 1 and Re s > -10.
ComplexEval zeta(std::complex<double> s);

/// zeta^(j)(s) for j = 0..jmax by the Cauchy integral formula, 1/2 <= sigma <= 3.
std::vector<ComplexEval> zeta_derivatives(EvalPoint p, int jmax);

/// zeta^(j)(s) for j = 0..jmax by differentiating the Euler-Maclaurin formula
/// term by term (analytic jets). Same domain as zeta_derivatives.
std::vector<ComplexEval> zeta_taylor(EvalPoint p, int jmax);

/// (zeta'/zeta)^(k) from a list of zeta derivatives of length >= k + 2.
ComplexEval log_derivative_from(std::span<const ComplexEval> derivs, int k);

/// (zeta'/zeta)^(k)(s) for sigma > 1/2 via zeta_derivatives.
ComplexEval log_derivative_k(EvalPoint p, int k);

/// Riemann-Siegel theta, t >= 2.
double riemann_siegel_theta(double t);

/// Hardy's Z(t) = Re(exp(i theta(t)) zeta(1/2 + it)), t >= 2.
double hardy_z(double t);

/// Evaluates the Taylor jets of zeta along a vertical line sigma = const at
/// equally spaced heights. The Dirichlet main sum is advanced by phase
/// rotation, which makes dense sampling several times cheaper than repeated
/// point evaluation. Results agree with zeta_taylor to ~1e-12 relative.
class LineEvaluator {
 public:
  /// Valid for heights in [0, t_limit].
  LineEvaluator(double sigma, int jmax, double t_limit);

  int jmax() const { return jmax_; }
  std::size_t terms() const { return log_n_.size() + 1; }

  /// derivs[m * (jmax + 1) + j] = zeta^(j)(sigma + i(t0 + m dt)).
  void evaluate(double t0, double dt, std::size_t steps, std::span<std::complex<double>> derivs) const;

 private:
  double sigma_;
  int jmax_;
  double t_limit_;
  std::vector<double> log_n_;
  std::vector<double> amplitude_;
};

}  // namespace zetalab
