#include "zetalab/moments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>

#include "zetalab/errors.hpp"
#include "zetalab/numerics/parallel.hpp"
#include "zetalab/numerics/quadrature.hpp"
#include "zetalab/numerics/special.hpp"
#include "zetalab/numerics/summation.hpp"
#include "zetalab/simd/kernels.hpp"
#include "zetalab/zeta_engine.hpp"

namespace zetalab {

namespace {

using cplx = std::complex<double>;

constexpr int kMaxMomentK = 4;
constexpr std::size_t kChunkIntervals = 1024;
constexpr std::size_t kRowBlock = 32;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_envelope(int k, double a, double T) {
  if (k < 0 || k > kMaxMomentK) throw DomainError("moments: k must be in [0, 4]");
  if (!(a >= 0.1 && a <= 5.0)) throw DomainError("moments: a must be in [0.1, 5]");
  if (!(T >= 200.0 && T <= 6000.0)) throw DomainError("moments: T must be in [200, 6000]");
}

double line_sigma(double a, double T) { return 0.5 + a / std::log(T); }

// int_1^T M(t)^2 dt
double mean_square_integral(double sigma, double T) {
  auto m2 = [sigma](double t) {
    const double m = explicit_formula_mean(sigma, t);
    return m * m;
  };
  return numerics::integrate_adaptive<double>(m2, 1.0, T, 1e-9, 1e-12, 20000).value;
}

// theta'(t)/pi, the smooth density of zero ordinates.
double zero_density(double t) {
  const double dtheta =
      0.5 * numerics::digamma(cplx(0.25, 0.5 * t)).real() - 0.5 * std::log(std::numbers::pi);
  return std::max(0.0, dtheta / std::numbers::pi);
}

// Terms of |sum_rho Re 1/(s-rho) - M|^2 (real and imaginary parts together)
// that involve M. The pair representations only capture the zero sum itself;
// for k >= 1 the derivative of M is O(1/t) and these terms are negligible.
double mean_correction_from_zeros(double sigma, double T, std::span<const double> gammas) {
  std::vector<double> m(gammas.size());
  for (std::size_t i = 0; i < gammas.size(); ++i) m[i] = explicit_formula_mean(sigma, gammas[i]);
  const double cross = numerics::pairwise_sum<double>(m);
  return -4.0 * std::numbers::pi * cross + 2.0 * mean_square_integral(sigma, T);
}

// The weight w(u) = 4/(4+u^2) discards the far pairs, which for k = 0 carry
// a mean contribution. With zero density d(t) it is
//   2 pi int d(t) int (1 - w(u)) h_2b(u) du dt = 2 pi^2 b/(1+b) int d^2 dt.
double mean_correction_smooth(double sigma, double T) {
  auto cross = [sigma](double t) { return explicit_formula_mean(sigma, t) * zero_density(t); };
  auto dens2 = [](double t) {
    const double d = zero_density(t);
    return d * d;
  };
  const double c = numerics::integrate_adaptive<double>(cross, 1.0, T, 1e-9, 1e-12, 20000).value;
  const double d2 = numerics::integrate_adaptive<double>(dens2, 1.0, T, 1e-9, 1e-12, 20000).value;
  const double b = sigma - 0.5;
  const double far = 2.0 * std::numbers::pi * std::numbers::pi * b / (1.0 + b) * d2;
  return -4.0 * std::numbers::pi * c + 2.0 * mean_square_integral(sigma, T) + far;
}

// sum_{i<j} (1 - w(u)) h_b(scale u), the part of the k = 0 pair sum the weight removes.
double unweighted_remainder(std::span<const double> g, double scale, double b) {
  const std::size_t n = g.size();
  const std::size_t blocks = (n + kRowBlock - 1) / kRowBlock;
  std::vector<double> partial(blocks);
  numerics::parallel_for(blocks, [&](std::size_t blk) {
    double acc = 0.0;
    const std::size_t end = std::min(n, (blk + 1) * kRowBlock);
    for (std::size_t i = blk * kRowBlock; i < end; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double u = g[j] - g[i];
        const double x = scale * u;
        acc += (1.0 - montgomery_weight(u)) * b / (b * b + x * x);
      }
    }
    partial[blk] = acc;
  });
  return numerics::pairwise_sum<double>(partial);
}

// (log zeta)^(n) for n = 1..count from plain zeta derivatives.
template <std::size_t Max>
void log_derivatives(const cplx* z, int count, std::array<cplx, Max>& g) {
  const cplx inv = 1.0 / z[0];
  for (int n = 1; n <= count; ++n) {
    cplx num = z[n];
    double binom = 1.0;
    for (int j = 0; j <= n - 2; ++j) {
      num -= binom * g[j + 1] * z[n - 1 - j];
      binom = binom * (n - 1 - j) / (j + 1);
    }
    g[n] = num * inv;
  }
}

struct Segment {
  double start, end;
  std::size_t intervals;  // multiple of 4
};

struct Chunk {
  std::size_t segment, first, last;  // node range [first, last]; last node owned only at segment end
};

std::vector<Segment> build_mesh(double T, double coarse, double fine, double halfwidth,
                                std::span<const double> gammas) {
  std::vector<std::pair<double, double>> windows;
  for (double g : gammas) {
    const double lo = std::max(1.0, g - halfwidth), hi = std::min(T, g + halfwidth);
    if (hi <= lo) continue;
    if (!windows.empty() && lo <= windows.back().second) {
      windows.back().second = std::max(windows.back().second, hi);
    } else {
      windows.emplace_back(lo, hi);
    }
  }
  std::vector<Segment> mesh;
  auto add = [&](double lo, double hi, double step) {
    if (hi - lo <= 1e-12) return;
    std::size_t n = static_cast<std::size_t>(std::ceil((hi - lo) / step - 1e-9));
    n = std::max<std::size_t>(4, (n + 3) / 4 * 4);
    mesh.push_back({lo, hi, n});
  };
  double cursor = 1.0;
  for (const auto& [lo, hi] : windows) {
    add(cursor, lo, coarse);
    add(std::max(cursor, lo), hi, fine);
    cursor = std::max(cursor, hi);
  }
  add(cursor, T, coarse);
  return mesh;
}

// Simpson weights (in units of h/3) at step h and, using every other node, 2h.
inline double simpson_weight(std::size_t i, std::size_t n) {
  if (i == 0 || i == n) return 1.0;
  return i % 2 == 1 ? 4.0 : 2.0;
}
inline double simpson_weight_double(std::size_t i, std::size_t n) {
  if (i % 2 == 1) return 0.0;
  if (i == 0 || i == n) return 2.0;
  return i % 4 == 2 ? 8.0 : 4.0;
}

// Gauss-Legendre 6-point rule on [0, 1].
constexpr std::array<double, 6> kGlNodes = {0.033765242898423986, 0.16939530676686776,
                                            0.38069040695840156,  0.61930959304159845,
                                            0.83060469323313224,  0.96623475710157601};
constexpr std::array<double, 6> kGlWeights = {0.085662246189585178, 0.18038078652406930,
                                              0.23395696728634552,  0.23395696728634552,
                                              0.18038078652406930,  0.085662246189585178};

// int over the grid span of weight(alpha) * (piecewise-linear interpolant of F), using
// every stride-th sample.
template <class W>
double product_integral(const FGrid& grid, W&& weight, std::size_t stride) {
  const auto& a = grid.alphas;
  const auto& v = grid.values;
  std::vector<double> parts;
  std::size_t i = 0;
  while (i + 1 < a.size()) {
    const std::size_t j = std::min(a.size() - 1, i + stride);
    const double h = a[j] - a[i];
    double s = 0.0;
    for (std::size_t q = 0; q < kGlNodes.size(); ++q) {
      const double u = kGlNodes[q];
      s += kGlWeights[q] * weight(a[i] + u * h) * ((1.0 - u) * v[i] + u * v[j]);
    }
    parts.push_back(s * h);
    i = j;
  }
  return numerics::pairwise_sum<double>(parts);
}

// int_x^inf alpha^p e^{-c alpha} d alpha for integer p >= 0.
double upper_gamma_moment(int p, double c, double x) {
  const double y = c * x;
  double term = 1.0, sum = 1.0;
  for (int j = 1; j <= p; ++j) {
    term *= y / j;
    sum += term;
  }
  return factorial(p) / std::pow(c, p + 1) * std::exp(-y) * sum;
}

}  // namespace

double explicit_formula_mean(double sigma, double t) {
  const cplx s(sigma, t);
  return 0.5 * numerics::digamma(0.5 * s + 1.0).real() - 0.5 * std::log(std::numbers::pi) +
         (1.0 / (s - 1.0)).real();
}

std::vector<MomentEstimate> i_k_quadrature_all(int kmax, double a, double T, const ZeroTable& zeros,
                                               const QuadratureOptions& options) {
  check_envelope(kmax, a, T);
  require_coverage(zeros, T);
  if (options.refine < 1 || !(options.step_scale > 0.0)) throw DomainError("bad quadrature options");
  const double L = std::log(T);
  const double sigma = line_sigma(a, T);
  const double coarse = std::min(0.01, a / (4.0 * L)) * options.step_scale;
  const double fine = coarse / options.refine;
  const auto mesh = build_mesh(T, coarse, fine, 10.0 * a / L, zeros.ordinates);

  std::vector<Chunk> chunks;
  long long nodes = 0;
  for (std::size_t s = 0; s < mesh.size(); ++s) {
    for (std::size_t i = 0; i < mesh[s].intervals; i += kChunkIntervals) {
      chunks.push_back({s, i, std::min(mesh[s].intervals, i + kChunkIntervals)});
    }
    nodes += static_cast<long long>(mesh[s].intervals) + 1;
  }

  const int orders = kmax + 2;
  const LineEvaluator line(sigma, kmax + 1, T);
  constexpr std::size_t kSlots = kMaxMomentK + 1;
  std::vector<std::array<double, kSlots>> fine_sum(chunks.size()), coarse_sum(chunks.size());
  numerics::parallel_for(chunks.size(), [&](std::size_t c) {
    const Chunk& ch = chunks[c];
    const Segment& seg = mesh[ch.segment];
    const double h = (seg.end - seg.start) / static_cast<double>(seg.intervals);
    const std::size_t steps = ch.last - ch.first + 1;
    std::vector<cplx> z(steps * orders);
    line.evaluate(seg.start + static_cast<double>(ch.first) * h, h, steps, z);
    std::array<double, kSlots> sf{}, sc{};
    std::array<cplx, kSlots + 1> g{};
    const bool owns_last = ch.last == seg.intervals;
    for (std::size_t m = 0; m < steps; ++m) {
      const std::size_t i = ch.first + m;
      if (i == ch.last && !owns_last) break;
      log_derivatives(&z[m * orders], kmax + 1, g);
      const double wf = simpson_weight(i, seg.intervals);
      const double wc = simpson_weight_double(i, seg.intervals);
      for (int k = 0; k <= kmax; ++k) {
        const double f = std::norm(g[k + 1]);
        sf[k] += wf * f;
        sc[k] += wc * f;
      }
    }
    for (int k = 0; k <= kmax; ++k) {
      sf[k] *= h / 3.0;
      sc[k] *= h / 3.0;
    }
    fine_sum[c] = sf;
    coarse_sum[c] = sc;
  });

  std::vector<MomentEstimate> out;
  std::vector<double> column(chunks.size());
  for (int k = 0; k <= kmax; ++k) {
    for (std::size_t c = 0; c < chunks.size(); ++c) column[c] = fine_sum[c][k];
    const double value = numerics::pairwise_sum<double>(column);
    for (std::size_t c = 0; c < chunks.size(); ++c) column[c] = coarse_sum[c][k];
    const double halved = numerics::pairwise_sum<double>(column);
    const double err = std::abs(value - halved);
    if (!std::isfinite(value) || err > 0.05 * std::abs(value)) {
      throw PrecisionError("i_k_quadrature: step halving changes I_" + std::to_string(k) +
                           " by more than 5%");
    }
    out.push_back({MomentKind::i_quadrature, k, a, T, value, err, 0.0, nodes});
  }
  return out;
}

MomentEstimate i_k_quadrature(int k, double a, double T, const ZeroTable& zeros,
                              const QuadratureOptions& options) {
  check_envelope(k, a, T);
  return i_k_quadrature_all(k, a, T, zeros, options).back();
}

MomentEstimate i_k_from_zeros(int k, double a, double T, const ZeroTable& zeros) {
  check_envelope(k, a, T);
  require_coverage(zeros, T);
  const auto g = zeros.up_to(T);
  const double L = std::log(T);
  const double b = a / std::numbers::pi;
  const double scale = L / (2.0 * std::numbers::pi);
  const int power = 2 * k + 1;
  const std::size_t n = g.size();
  const std::size_t blocks = (n + kRowBlock - 1) / kRowBlock;
  std::vector<double> partial(blocks);
  numerics::parallel_for(blocks, [&](std::size_t blk) {
    double acc = 0.0;
    const std::size_t end = std::min(n, (blk + 1) * kRowBlock);
    for (std::size_t i = blk * kRowBlock; i < end; ++i) {
      acc += simd::poisson_power_row(g[i], g.subspan(i + 1), scale, b, power).real();
    }
    partial[blk] = acc;
  });
  // (h_b)^(2k)(x) = (-1)^k (2k)! Re (b + ix)^-(2k+1); the sign cancels the prefactor's.
  double pairs = static_cast<double>(n) * std::pow(b, -power) +
                 2.0 * numerics::pairwise_sum<double>(partial);
  // k = 0 goes through the explicit formula, which needs the plain pair sum
  if (k == 0) pairs += 2.0 * unweighted_remainder(g, scale, b);
  double value = factorial(2 * k) / std::pow(2.0 * std::numbers::pi, 2 * k) *
                 std::pow(L, 2 * k + 1) * pairs;
  if (k == 0) value += mean_correction_from_zeros(line_sigma(a, T), T, g);
  const double err = T * std::pow(L, 2 * k + 1) / std::pow(a, 2 * k - 1) +
                     std::pow(L, 2 * k + 4) / std::pow(a, 2 * k + 2);
  return {MomentKind::i_zero_pairs, k, a, T, value, err, 0.0, static_cast<long long>(n)};
}

MomentEstimate i_k_from_f(int k, double a, double T, const FGrid& grid) {
  check_envelope(k, a, T);
  if (grid.T != T) throw DomainError("i_k_from_f: grid was built for a different T");
  if (grid.alphas.size() < 3 || grid.alphas.size() != grid.values.size() || grid.alphas.front() != 0.0) {
    throw RangeError("i_k_from_f: grid must start at alpha = 0 with at least 3 samples");
  }
  const double alpha_max = grid.alphas.back();
  if (alpha_max < 2.0) throw RangeError("i_k_from_f: grid must reach alpha >= 2");
  const double L = std::log(T);
  const double c = 2.0 * a;
  auto weight = [k, c](double x) { return std::pow(x, 2 * k) * std::exp(-c * x); };
  const double body = product_integral(grid, weight, 1);
  const double body_coarse = product_integral(grid, weight, 2);

  // Beyond the grid F is taken at its mean over the last unit of alpha, where
  // it has settled to the diagonal plateau.
  const double plateau = f_window_integral(grid, alpha_max - 1.0, 1.0);
  double lo = grid.values.back(), hi = grid.values.back();
  for (std::size_t i = 0; i < grid.alphas.size(); ++i) {
    if (grid.alphas[i] >= alpha_max - 1.0) {
      lo = std::min(lo, grid.values[i]);
      hi = std::max(hi, grid.values[i]);
    }
  }
  const double tail_weight = upper_gamma_moment(2 * k, c, alpha_max);
  const double tail = plateau * tail_weight;
  if (tail > 0.5 * (body + tail)) {
    throw RangeError("i_k_from_f: grid too short, tail carries over half of the integral");
  }
  const double scale = T * std::pow(L, 2 * k + 2);
  double value = scale * (body + tail);
  if (k == 0) value += mean_correction_smooth(line_sigma(a, T), T);
  const double err = scale * (std::abs(body - body_coarse) + 0.5 * (hi - lo) * tail_weight);
  return {MomentKind::i_from_f, k, a, T, value, err, 0.0, static_cast<long long>(grid.alphas.size())};
}

MomentEstimate d_k(int k, double a, double T, const ZeroTable& zeros) {
  if (k < 0 || k > kMaxMomentK) throw DomainError("d_k: k must be in [0, 4]");
  // The shifted line sum is also used at 2a, so the width range is doubled.
  if (!(a >= 0.1 && a <= 10.0)) throw DomainError("d_k: a must be in [0.1, 10]");
  if (!(T >= 20.0 && T <= 6000.0)) throw DomainError("d_k: T must be in [20, 6000]");
  require_coverage(zeros, T);
  const auto g = zeros.up_to(T);
  const double sigma = line_sigma(a, T);
  std::vector<double> re(g.size()), im(g.size()), err(g.size());
  const std::size_t blocks = (g.size() + kRowBlock - 1) / kRowBlock;
  numerics::parallel_for(blocks, [&](std::size_t blk) {
    const std::size_t end = std::min(g.size(), (blk + 1) * kRowBlock);
    for (std::size_t i = blk * kRowBlock; i < end; ++i) {
      const ComplexEval v = log_derivative_k({sigma, g[i]}, 2 * k);
      re[i] = v.value.real();
      im[i] = v.value.imag();
      err[i] = v.abs_error;
    }
  });
  MomentEstimate est{MomentKind::d_discrete, k, a, T, 0.0, 0.0, 0.0, static_cast<long long>(g.size())};
  est.value = numerics::pairwise_sum<double>(re);
  est.imag_part = numerics::pairwise_sum<double>(im);
  // the imaginary part should cancel in aggregate; what is left counts as error
  est.err_estimate = numerics::pairwise_sum<double>(err) + std::abs(est.imag_part);
  return est;
}

double farmer_ratio(const MomentEstimate& i_quad, const MomentEstimate& d) {
  if (!(std::abs(d.value) > d.err_estimate)) {
    throw DivisionError("farmer_ratio: discrete moment is within its error of zero");
  }
  return i_quad.value / (2.0 * std::numbers::pi * d.value);
}

double farmer_ratio(int k, double a, double T, const ZeroTable& zeros) {
  const MomentEstimate i_quad = i_k_quadrature(k, a, T, zeros);
  return farmer_ratio(i_quad, d_k(k, 2.0 * a, T, zeros));
}

}  // namespace zetalab
