#include "zetalab/zeta_engine.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "zetalab/errors.hpp"
#include "zetalab/numerics/special.hpp"
#include "zetalab/simd/kernels.hpp"

namespace zetalab {

namespace {

using cplx = std::complex<double>;

constexpr double kEps = 2.220446049250313e-16;
constexpr int kMinCorrections = 10;
constexpr int kMaxCorrections = 140;
constexpr int kContourNodes = 64;
constexpr double kContourRadius = 0.45;
constexpr std::size_t kMaxOrders = kMaxZetaOrder + 2;

using Jet = std::array<cplx, kMaxOrders>;

// log(n + 1) for n < size; covers every main sum up to kMaxHeight + 1.
const std::vector<double>& log_table() {
  static const std::vector<double> table = [] {
    std::vector<double> v(euler_maclaurin_terms(kMaxHeight + 1.0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::log(static_cast<double>(i + 1));
    return v;
  }();
  return table;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Euler-Maclaurin remainder beyond the main sum n < N, as Taylor
// coefficients in eps of
//   N^(1-s-eps)/(s+eps-1) + N^(-s-eps)/2 + sum_r B_2r/(2r)! (s+eps)_(2r-1) N^(1-s-eps-2r).
// err[j] bounds the truncation of the Bernoulli series for coefficient j.
struct Tail {
  Jet coef{};
  std::array<double, kMaxOrders> err{};
};

Tail euler_maclaurin_tail(cplx s, std::size_t N, std::size_t orders) {
  const double n = static_cast<double>(N);
  const double log_n = std::log(n);
  const cplx n_pow = std::exp(-s * log_n);  // N^-s

  Jet e{};  // N^-(s+eps)
  {
    cplx term = n_pow;
    for (std::size_t j = 0; j < orders; ++j) {
      e[j] = term;
      term *= -log_n / static_cast<double>(j + 1);
    }
  }

  // Bernoulli corrections, scaled so that no factor overflows:
  // q_r = B_2r/(2r)! (s+eps)_(2r-1) N^(1-2r).
  Jet q{};
  q[0] = numerics::bernoulli_over_factorial(1) * s / n;
  if (orders > 1) q[1] = numerics::bernoulli_over_factorial(1) / n;
  Jet q_sum{};
  std::array<double, kMaxOrders> log_scale{};
  for (std::size_t j = 0; j < orders; ++j) log_scale[j] = std::pow(1.0 + log_n, static_cast<double>(j));
  const double amp = std::abs(n_pow);

  auto jet_size = [&](const Jet& x) {
    double m = 0.0;
    for (std::size_t j = 0; j < orders; ++j) m = std::max(m, std::abs(x[j]) * log_scale[j]);
    return m;
  };

  int r = 1;
  for (;; ++r) {
    for (std::size_t j = 0; j < orders; ++j) q_sum[j] += q[j];
    // Advance to q_{r+1}: multiply by (s+eps+2r-1)(s+eps+2r) / N^2 and the Bernoulli ratio.
    const double ratio = numerics::bernoulli_over_factorial(r + 1) /
                         numerics::bernoulli_over_factorial(r) / (n * n);
    for (int f = 0; f < 2; ++f) {
      const cplx c = s + static_cast<double>(2 * r - 1 + f);
      for (std::size_t j = orders; j-- > 0;) q[j] = c * q[j] + (j > 0 ? q[j - 1] : cplx{});
    }
    for (std::size_t j = 0; j < orders; ++j) q[j] *= ratio;
    // q now holds the first omitted term.
    if (r >= kMinCorrections && amp * jet_size(q) < 1e-18) break;
    if (r + 1 >= kMaxCorrections) {
      throw PrecisionError("Euler-Maclaurin correction series did not converge at s = (" +
                           std::to_string(s.real()) + ", " + std::to_string(s.imag()) + ")");
    }
  }

  Tail tail;
  const cplx inv_base = 1.0 / (s - 1.0);
  cplx inv = inv_base;  // coefficients of 1/(s - 1 + eps)
  Jet pole{};
  for (std::size_t j = 0; j < orders; ++j) {
    pole[j] = inv;
    inv *= -inv_base;
  }
  // Remainder bound factor |s + 2R + 1| / (sigma + 2R + 1) for the omitted term.
  const double growth = std::abs(s + static_cast<double>(2 * r + 1)) / (s.real() + 2 * r + 1);
  for (std::size_t j = 0; j < orders; ++j) {
    cplx acc = 0.5 * e[j];
    cplx omitted = 0.0;
    for (std::size_t i = 0; i <= j; ++i) {
      acc += e[i] * (n * pole[j - i] + q_sum[j - i]);
      omitted += e[i] * q[j - i];
    }
    tail.coef[j] = acc;
    tail.err[j] = std::abs(omitted) * growth;
  }
  return tail;
}

// Rough magnitude of sum_{n<N} n^-sigma (log n)^j, for roundoff estimates.
double main_sum_scale(double sigma, std::size_t N, std::size_t j) {
  const double n = static_cast<double>(N);
  const double body = std::abs(sigma - 1.0) < 1e-9 ? std::log(n)
                                                     : (std::pow(n, 1.0 - sigma) - 1.0) / (1.0 - sigma);
  return (1.0 + body) * std::pow(std::log(n), static_cast<double>(j));
}

// Roundoff of the main sum is dominated by the phases t*log(n), each off by
// about eps*|t|*log(n); those errors add like a random walk.
double main_sum_roundoff(double sigma, double t, std::size_t N, std::size_t j) {
  const double phase = 1.0 + std::abs(t) * std::log(static_cast<double>(N));
  return 4.0 * kEps * (main_sum_scale(sigma, N, j) + phase * std::sqrt(main_sum_scale(2.0 * sigma, N, 2 * j)));
}

void check_point(EvalPoint p, const char* what) {
  if (!std::isfinite(p.sigma) || !std::isfinite(p.t) || p.sigma < 0.5 || p.sigma > 3.0 ||
      std::abs(p.t) > kMaxHeight) {
    throw DomainError(std::string(what) + ": point outside 1/2 <= sigma <= 3, |t| <= 1e4");
  }
  if (p.sigma == 1.0 && p.t == 0.0) throw DomainError(std::string(what) + ": pole at s = 1");
}

void check_precision(std::span<const ComplexEval> evals, const char* what) {
  for (std::size_t j = 0; j < evals.size(); ++j) {
    const auto& e = evals[j];
    if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag()) ||
        !std::isfinite(e.abs_error) || e.abs_error > 1e-8 * std::max(1.0, std::abs(e.value))) {
      throw PrecisionError(std::string(what) + ": order " + std::to_string(j) +
                           " missed the 1e-8 accuracy target");
    }
  }
}

}  // namespace

std::size_t euler_maclaurin_terms(double t) {
  const double n = std::ceil(1.3 * std::abs(t) / (2.0 * std::numbers::pi)) + 10.0;
  return static_cast<std::size_t>(std::max(32.0, n));
}

ComplexEval zeta(cplx s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()) || s.real() <= -10.0 ||
      std::abs(s.imag()) > kMaxHeight + 1.0) {
    throw DomainError("zeta: argument outside the supported region");
  }
  if (s == cplx(1.0, 0.0)) throw DomainError("zeta: pole at s = 1");
  const std::size_t N = euler_maclaurin_terms(s.imag());
  cplx main;
  simd::dirichlet_power_sums(std::span(log_table()).first(N - 1), s.real(), s.imag(),
                             std::span(&main, 1));
  const Tail tail = euler_maclaurin_tail(s, N, 1);
  const cplx value = main + tail.coef[0];
  const double err = tail.err[0] + main_sum_roundoff(s.real(), s.imag(), N, 0) + 4.0 * kEps * std::abs(value);
  return {value, err};
}

std::vector<ComplexEval> zeta_derivatives(EvalPoint p, int jmax) {
  check_point(p, "zeta_derivatives");
  if (jmax < 0 || jmax > kMaxZetaOrder) throw DomainError("zeta_derivatives: jmax must be in [0, 12]");
  const cplx s = p.s();
  std::vector<ComplexEval> out(jmax + 1);
  out[0] = zeta(s);
  if (jmax == 0) {
    check_precision(out, "zeta_derivatives");
    return out;
  }

  const double radius = std::min(kContourRadius, std::abs(s - 1.0) / 2.0);
  std::array<cplx, kContourNodes> f{};
  std::array<cplx, kContourNodes> node{};
  double f_max = 0.0;
  double f_err = 0.0;
  for (int m = 0; m < kContourNodes; ++m) {
    node[m] = std::polar(1.0, 2.0 * std::numbers::pi * m / kContourNodes);
    const ComplexEval z = zeta(s + radius * node[m]);
    f[m] = z.value;
    f_max = std::max(f_max, std::abs(z.value));
    f_err = std::max(f_err, z.abs_error);
  }
  for (int j = 1; j <= jmax; ++j) {
    cplx full = 0.0, half = 0.0;
    for (int m = 0; m < kContourNodes; ++m) {
      const cplx term = f[m] * std::conj(node[(j * m) % kContourNodes]);
      full += term;
      if (m % 2 == 0) half += term;
    }
    const double scale = factorial(j) / std::pow(radius, j);
    full *= scale / kContourNodes;
    half *= scale / (kContourNodes / 2);
    // Trapezoid error decays geometrically in the node count, so the 64-node
    // error is about the square of the relative 32-node discrepancy.
    const double cauchy = scale * f_max;
    const double diff = std::abs(full - half);
    const double err = diff * std::min(1.0, diff / std::max(cauchy, 1e-300)) +
                       scale * (f_err + 8.0 * kEps * f_max);
    out[j] = {full, err};
  }
  check_precision(out, "zeta_derivatives");
  return out;
}

std::vector<ComplexEval> zeta_taylor(EvalPoint p, int jmax) {
  check_point(p, "zeta_taylor");
  if (jmax < 0 || jmax > kMaxZetaOrder) throw DomainError("zeta_taylor: jmax must be in [0, 12]");
  const cplx s = p.s();
  const std::size_t orders = static_cast<std::size_t>(jmax) + 1;
  const std::size_t N = euler_maclaurin_terms(p.t);
  std::array<cplx, kMaxOrders> sums{};
  simd::dirichlet_power_sums(std::span(log_table()).first(N - 1), p.sigma, p.t,
                             std::span(sums.data(), orders));
  const Tail tail = euler_maclaurin_tail(s, N, orders);
  std::vector<ComplexEval> out(orders);
  for (std::size_t j = 0; j < orders; ++j) {
    const double fact = factorial(static_cast<int>(j));
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const cplx value = sign * sums[j] + fact * tail.coef[j];
    const double err = fact * tail.err[j] + main_sum_roundoff(p.sigma, p.t, N, j) +
                       4.0 * kEps * std::abs(value);
    out[j] = {value, err};
  }
  check_precision(out, "zeta_taylor");
  return out;
}

ComplexEval log_derivative_from(std::span<const ComplexEval> derivs, int k) {
  if (k < 0 || derivs.size() < static_cast<std::size_t>(k) + 2) {
    throw DomainError("log_derivative_from: need derivatives up to order k + 1");
  }
  const cplx z0 = derivs[0].value;
  const double a0 = std::abs(z0);
  if (!(a0 > 1e-12)) throw NearZeroError("log_derivative: |zeta(s)| below 1e-12");
  // g[n] holds (log zeta)^(n) for n = 1..k+1.
  std::vector<cplx> g(k + 2);
  std::vector<double> ge(k + 2);
  for (int n = 1; n <= k + 1; ++n) {
    cplx num = derivs[n].value;
    double num_err = derivs[n].abs_error;
    double binom = 1.0;  // C(n-1, j)
    for (int j = 0; j <= n - 2; ++j) {
      const cplx zd = derivs[n - 1 - j].value;
      num -= binom * g[j + 1] * zd;
      num_err += binom * (ge[j + 1] * std::abs(zd) + std::abs(g[j + 1]) * derivs[n - 1 - j].abs_error);
      binom = binom * (n - 1 - j) / (j + 1);
    }
    g[n] = num / z0;
    ge[n] = (num_err + std::abs(g[n]) * derivs[0].abs_error) / a0 + 4.0 * kEps * std::abs(g[n]);
  }
  return {g[k + 1], ge[k + 1]};
}

ComplexEval log_derivative_k(EvalPoint p, int k) {
  if (!(p.sigma > 0.5)) throw DomainError("log_derivative_k: sigma must exceed 1/2");
  if (k < 0 || k > kMaxLogDerivativeOrder) throw DomainError("log_derivative_k: k must be in [0, 8]");
  const auto derivs = zeta_derivatives(p, k + 1);
  const ComplexEval g = log_derivative_from(derivs, k);
  if (!std::isfinite(g.abs_error)) throw PrecisionError("log_derivative_k: error bound overflowed");
  return g;
}

double riemann_siegel_theta(double t) {
  if (!(t >= 2.0)) throw DomainError("riemann_siegel_theta: t must be >= 2");
  const cplx lg = numerics::log_gamma(cplx(0.25, 0.5 * t));
  return lg.imag() - 0.5 * t * std::log(std::numbers::pi);
}

double hardy_z(double t) {
  if (!(t >= 2.0) || t > kMaxHeight) throw DomainError("hardy_z: t must be in [2, 1e4]");
  const ComplexEval z = zeta(cplx(0.5, t));
  if (z.abs_error > 1e-8 * std::max(1.0, std::abs(z.value))) {
    throw PrecisionError("hardy_z: zeta evaluation missed the accuracy target");
  }
  return (std::polar(1.0, riemann_siegel_theta(t)) * z.value).real();
}

LineEvaluator::LineEvaluator(double sigma, int jmax, double t_limit)
    : sigma_(sigma), jmax_(jmax), t_limit_(t_limit) {
  if (!(sigma >= 0.5 && sigma <= 3.0)) throw DomainError("LineEvaluator: sigma outside [1/2, 3]");
  if (jmax < 0 || jmax > kMaxZetaOrder) throw DomainError("LineEvaluator: jmax must be in [0, 12]");
  if (!(t_limit >= 0.0 && t_limit <= kMaxHeight)) throw DomainError("LineEvaluator: bad height limit");
  const std::size_t N = euler_maclaurin_terms(t_limit);
  log_n_.assign(log_table().begin(), log_table().begin() + static_cast<std::ptrdiff_t>(N - 1));
  amplitude_.resize(log_n_.size());
  for (std::size_t i = 0; i < log_n_.size(); ++i) amplitude_[i] = std::exp(-sigma * log_n_[i]);
}

void LineEvaluator::evaluate(double t0, double dt, std::size_t steps,
                             std::span<std::complex<double>> derivs) const {
  const std::size_t orders = static_cast<std::size_t>(jmax_) + 1;
  if (derivs.size() < steps * orders) throw DomainError("LineEvaluator: output buffer too short");
  if (steps == 0) return;
  const double t_last = t0 + static_cast<double>(steps - 1) * dt;
  // last node of a mesh may overshoot by rounding
  const double limit = t_limit_ * (1.0 + 1e-12) + 1e-9;
  if (std::abs(t0) > limit || std::abs(t_last) > limit) {
    throw DomainError("LineEvaluator: heights outside the configured range");
  }
  if (sigma_ == 1.0 && t0 <= 0.0 && t_last >= 0.0) throw DomainError("LineEvaluator: pole at s = 1");
  simd::dirichlet_line_sums(log_n_, amplitude_, t0, dt, steps, orders, derivs);
  std::array<double, kMaxOrders> fact{};
  for (std::size_t j = 0; j < orders; ++j) fact[j] = factorial(static_cast<int>(j));
  const std::size_t N = log_n_.size() + 1;
  for (std::size_t m = 0; m < steps; ++m) {
    const cplx s(sigma_, t0 + static_cast<double>(m) * dt);
    const Tail tail = euler_maclaurin_tail(s, N, orders);
    for (std::size_t j = 0; j < orders; ++j) {
      cplx& d = derivs[m * orders + j];
      d = (j % 2 == 0 ? d : -d) + fact[j] * tail.coef[j];
    }
  }
}

}  // namespace zetalab
