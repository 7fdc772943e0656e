// AVX2 + FMA variants of the kernels in kernels_scalar.cpp. Lanes hold four
// consecutive terms; partial sums stay in lanes and are reduced at the end
// in a fixed order, so results are deterministic but may differ from the
// scalar reference by rounding.

#include <immintrin.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/simd/kernels.hpp"

namespace zetalab::simd::avx2 {

namespace {

// Beyond this the three-term Cody-Waite reduction loses bits; such lanes are
// recomputed with libm.
constexpr double kReductionLimit = 823549.6;

inline __m256d set1(double x) { return _mm256_set1_pd(x); }

inline double hsum(__m256d v) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, v);
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

inline __m256d vabs(__m256d x) { return _mm256_andnot_pd(set1(-0.0), x); }

// n as int64 lanes, for integral |n| < 2^51.
inline __m256i to_int64(__m256d n) {
  const __m256d magic = set1(6755399441055744.0);  // 2^52 + 2^51
  return _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(n, magic)),
                          _mm256_castpd_si256(magic));
}

inline void vsincos(__m256d x, __m256d& s_out, __m256d& c_out) {
  const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, set1(6.36619772367581382433e-01)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, set1(1.57079632673412561417e+00), x);
  r = _mm256_fnmadd_pd(n, set1(6.07710050630396597660e-11), r);
  r = _mm256_fnmadd_pd(n, set1(2.02226624871116645580e-21), r);

  const __m256d z = _mm256_mul_pd(r, r);
  __m256d ps = set1(1.58969099521155010221e-10);
  ps = _mm256_fmadd_pd(ps, z, set1(-2.50507602534068634195e-08));
  ps = _mm256_fmadd_pd(ps, z, set1(2.75573137070700676789e-06));
  ps = _mm256_fmadd_pd(ps, z, set1(-1.98412698298579493134e-04));
  ps = _mm256_fmadd_pd(ps, z, set1(8.33333333332248946124e-03));
  ps = _mm256_fmadd_pd(ps, z, set1(-1.66666666666666324348e-01));
  const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(z, r), ps, r);

  __m256d pc = set1(-1.13596475577881948265e-11);
  pc = _mm256_fmadd_pd(pc, z, set1(2.08757232129817482790e-09));
  pc = _mm256_fmadd_pd(pc, z, set1(-2.75573143513906633035e-07));
  pc = _mm256_fmadd_pd(pc, z, set1(2.48015872894767294178e-05));
  pc = _mm256_fmadd_pd(pc, z, set1(-1.38888888888741095749e-03));
  pc = _mm256_fmadd_pd(pc, z, set1(4.16666666666666019037e-02));
  const __m256d zz = _mm256_mul_pd(z, z);
  const __m256d cos_r =
      _mm256_sub_pd(set1(1.0), _mm256_fmsub_pd(set1(0.5), z, _mm256_mul_pd(zz, pc)));

  const __m256i q = to_int64(n);
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i two = _mm256_set1_epi64x(2);
  const __m256d swap =
      _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q, one), one));
  const __m256d sin_neg =
      _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_and_si256(q, two), 62));
  const __m256d cos_neg = _mm256_castsi256_pd(
      _mm256_slli_epi64(_mm256_and_si256(_mm256_add_epi64(q, one), two), 62));

  __m256d s = _mm256_blendv_pd(sin_r, cos_r, swap);
  __m256d c = _mm256_blendv_pd(cos_r, sin_r, swap);
  s = _mm256_xor_pd(s, sin_neg);
  c = _mm256_xor_pd(c, cos_neg);

  const __m256d big = _mm256_cmp_pd(vabs(x), set1(kReductionLimit), _CMP_GT_OQ);
  if (!_mm256_testz_pd(big, big)) {
    alignas(32) double xs[4], ss[4], cs[4];
    _mm256_store_pd(xs, x);
    _mm256_store_pd(ss, s);
    _mm256_store_pd(cs, c);
    for (int l = 0; l < 4; ++l) {
      if (std::abs(xs[l]) > kReductionLimit) {
        ss[l] = std::sin(xs[l]);
        cs[l] = std::cos(xs[l]);
      }
    }
    s = _mm256_load_pd(ss);
    c = _mm256_load_pd(cs);
  }
  s_out = s;
  c_out = c;
}

// exp for x in roughly [-708, 709]; smaller arguments flush to zero.
inline __m256d vexp(__m256d x) {
  const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, set1(1.44269504088896338700e+00)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, set1(6.93147180369123816490e-01), x);
  r = _mm256_fnmadd_pd(n, set1(1.90821492927058770002e-10), r);
  // Taylor series of e^r, |r| <= ln2/2, through r^13.
  static constexpr std::array<double, 14> inv_fact = {
      1.0,
      1.0,
      1.0 / 2,
      1.0 / 6,
      1.0 / 24,
      1.0 / 120,
      1.0 / 720,
      1.0 / 5040,
      1.0 / 40320,
      1.0 / 362880,
      1.0 / 3628800,
      1.0 / 39916800,
      1.0 / 479001600,
      1.0 / 6227020800.0};
  __m256d p = set1(inv_fact[13]);
  for (int k = 12; k >= 0; --k) p = _mm256_fmadd_pd(p, r, set1(inv_fact[k]));
  const __m256d clamped = _mm256_max_pd(n, set1(-1022.0));
  const __m256i bits =
      _mm256_slli_epi64(_mm256_add_epi64(to_int64(clamped), _mm256_set1_epi64x(1023)), 52);
  __m256d result = _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
  const __m256d tiny = _mm256_cmp_pd(x, set1(-708.0), _CMP_LT_OQ);
  return _mm256_andnot_pd(tiny, result);
}

inline __m256d montgomery_weight(__m256d u) {
  return _mm256_div_pd(set1(4.0), _mm256_fmadd_pd(u, u, set1(4.0)));
}

constexpr std::size_t kMaxOrders = 16;

}  // namespace

void sincos_array(std::span<const double> x, std::span<double> sin_out, std::span<double> cos_out) {
  if (sin_out.size() < x.size() || cos_out.size() < x.size()) {
    throw DomainError("sincos_array: output too short");
  }
  std::size_t i = 0;
  for (; i + 4 <= x.size(); i += 4) {
    __m256d s, c;
    vsincos(_mm256_loadu_pd(&x[i]), s, c);
    _mm256_storeu_pd(&sin_out[i], s);
    _mm256_storeu_pd(&cos_out[i], c);
  }
  for (; i < x.size(); ++i) {
    sin_out[i] = std::sin(x[i]);
    cos_out[i] = std::cos(x[i]);
  }
}

void exp_array(std::span<const double> x, std::span<double> out) {
  if (out.size() < x.size()) throw DomainError("exp_array: output too short");
  std::size_t i = 0;
  for (; i + 4 <= x.size(); i += 4) _mm256_storeu_pd(&out[i], vexp(_mm256_loadu_pd(&x[i])));
  for (; i < x.size(); ++i) out[i] = std::exp(x[i]);
}

void dirichlet_power_sums(std::span<const double> log_n, double sigma, double t,
                          std::span<std::complex<double>> out) {
  const std::size_t orders = out.size();
  if (orders > kMaxOrders) {
    scalar::dirichlet_power_sums(log_n, sigma, t, out);
    return;
  }
  std::array<__m256d, kMaxOrders> acc_re, acc_im;
  acc_re.fill(_mm256_setzero_pd());
  acc_im.fill(_mm256_setzero_pd());
  const std::size_t body = log_n.size() / 4 * 4;
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d L = _mm256_loadu_pd(&log_n[i]);
    const __m256d amp = vexp(_mm256_mul_pd(set1(-sigma), L));
    __m256d s, c;
    vsincos(_mm256_mul_pd(set1(t), L), s, c);
    __m256d zr = _mm256_mul_pd(amp, c);
    __m256d zi = _mm256_xor_pd(_mm256_mul_pd(amp, s), set1(-0.0));
    for (std::size_t j = 0; j < orders; ++j) {
      acc_re[j] = _mm256_add_pd(acc_re[j], zr);
      acc_im[j] = _mm256_add_pd(acc_im[j], zi);
      zr = _mm256_mul_pd(zr, L);
      zi = _mm256_mul_pd(zi, L);
    }
  }
  std::array<std::complex<double>, kMaxOrders> tail{};
  scalar::dirichlet_power_sums(log_n.subspan(body), sigma, t, std::span(tail.data(), orders));
  for (std::size_t j = 0; j < orders; ++j) {
    out[j] = std::complex<double>(hsum(acc_re[j]), hsum(acc_im[j])) + tail[j];
  }
}

void dirichlet_line_sums(std::span<const double> log_n, std::span<const double> amplitude,
                         double t0, double dt, std::size_t steps, std::size_t orders,
                         std::span<std::complex<double>> out) {
  if (amplitude.size() != log_n.size() || out.size() < steps * orders) {
    throw DomainError("dirichlet_line_sums: inconsistent buffer sizes");
  }
  const std::size_t body = log_n.size() / 4 * 4;
  // Lane-resident accumulators, 4 doubles per (step, order).
  std::vector<double> acc_re(steps * orders * 4, 0.0), acc_im(steps * orders * 4, 0.0);
  for (std::size_t start = 0; start < steps; start += kLineResync) {
    const std::size_t stop = std::min(steps, start + kLineResync);
    const __m256d t_start = set1(t0 + static_cast<double>(start) * dt);
    for (std::size_t i = 0; i < body; i += 4) {
      const __m256d L = _mm256_loadu_pd(&log_n[i]);
      const __m256d amp = _mm256_loadu_pd(&amplitude[i]);
      __m256d s, c;
      vsincos(_mm256_mul_pd(t_start, L), s, c);
      __m256d er = _mm256_mul_pd(amp, c);
      __m256d ei = _mm256_xor_pd(_mm256_mul_pd(amp, s), set1(-0.0));
      vsincos(_mm256_mul_pd(set1(dt), L), s, c);
      const __m256d rr = c;
      const __m256d ri = _mm256_xor_pd(s, set1(-0.0));
      for (std::size_t m = start; m < stop; ++m) {
        double* pr = &acc_re[m * orders * 4];
        double* pi = &acc_im[m * orders * 4];
        __m256d zr = er, zi = ei;
        for (std::size_t j = 0; j < orders; ++j) {
          _mm256_storeu_pd(pr + 4 * j, _mm256_add_pd(_mm256_loadu_pd(pr + 4 * j), zr));
          _mm256_storeu_pd(pi + 4 * j, _mm256_add_pd(_mm256_loadu_pd(pi + 4 * j), zi));
          zr = _mm256_mul_pd(zr, L);
          zi = _mm256_mul_pd(zi, L);
        }
        const __m256d nr = _mm256_fmsub_pd(er, rr, _mm256_mul_pd(ei, ri));
        ei = _mm256_fmadd_pd(er, ri, _mm256_mul_pd(ei, rr));
        er = nr;
      }
    }
  }
  std::vector<std::complex<double>> tail(steps * orders);
  scalar::dirichlet_line_sums(log_n.subspan(body), amplitude.subspan(body), t0, dt, steps, orders,
                              tail);
  for (std::size_t q = 0; q < steps * orders; ++q) {
    out[q] = std::complex<double>(hsum(_mm256_loadu_pd(&acc_re[4 * q])),
                                  hsum(_mm256_loadu_pd(&acc_im[4 * q]))) +
             tail[q];
  }
}

double pair_cosine_row(double base, std::span<const double> others, double xi) {
  const std::size_t body = others.size() / 4 * 4;
  __m256d acc = _mm256_setzero_pd();
  const __m256d vbase = set1(base);
  const __m256d vxi = set1(xi);
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d u = _mm256_sub_pd(_mm256_loadu_pd(&others[i]), vbase);
    __m256d s, c;
    vsincos(_mm256_mul_pd(vxi, u), s, c);
    acc = _mm256_fmadd_pd(montgomery_weight(u), c, acc);
  }
  return hsum(acc) + scalar::pair_cosine_row(base, others.subspan(body), xi);
}

void pair_cosine_row_sweep(double base, std::span<const double> others, double xi0, double dxi,
                           std::span<double> out) {
  const std::size_t steps = out.size();
  const std::size_t body = others.size() / 4 * 4;
  std::vector<double> acc(steps * 4, 0.0);
  const __m256d vbase = set1(base);
  for (std::size_t start = 0; start < steps; start += kLineResync) {
    const std::size_t stop = std::min(steps, start + kLineResync);
    const __m256d xi_start = set1(xi0 + static_cast<double>(start) * dxi);
    for (std::size_t i = 0; i < body; i += 4) {
      const __m256d u = _mm256_sub_pd(_mm256_loadu_pd(&others[i]), vbase);
      const __m256d w = montgomery_weight(u);
      __m256d s, c;
      vsincos(_mm256_mul_pd(xi_start, u), s, c);
      c = _mm256_mul_pd(w, c);
      s = _mm256_mul_pd(w, s);
      __m256d rs, rc;
      vsincos(_mm256_mul_pd(set1(dxi), u), rs, rc);
      for (std::size_t m = start; m < stop; ++m) {
        double* p = &acc[4 * m];
        _mm256_storeu_pd(p, _mm256_add_pd(_mm256_loadu_pd(p), c));
        const __m256d nc = _mm256_fmsub_pd(c, rc, _mm256_mul_pd(s, rs));
        s = _mm256_fmadd_pd(c, rs, _mm256_mul_pd(s, rc));
        c = nc;
      }
    }
  }
  std::vector<double> tail(steps);
  scalar::pair_cosine_row_sweep(base, others.subspan(body), xi0, dxi, tail);
  for (std::size_t m = 0; m < steps; ++m) out[m] = hsum(_mm256_loadu_pd(&acc[4 * m])) + tail[m];
}

std::complex<double> poisson_power_row(double base, std::span<const double> others, double scale,
                                       double b, int power) {
  if (power < 1) throw DomainError("poisson_power_row: power must be >= 1");
  const std::size_t body = others.size() / 4 * 4;
  __m256d acc_re = _mm256_setzero_pd(), acc_im = _mm256_setzero_pd();
  const __m256d vbase = set1(base);
  const __m256d vb = set1(b);
  const __m256d vscale = set1(scale);
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d u = _mm256_sub_pd(_mm256_loadu_pd(&others[i]), vbase);
    const __m256d x = _mm256_mul_pd(vscale, u);
    const __m256d d = _mm256_div_pd(set1(1.0), _mm256_fmadd_pd(x, x, _mm256_mul_pd(vb, vb)));
    const __m256d zr = _mm256_mul_pd(vb, d);
    const __m256d zi = _mm256_xor_pd(_mm256_mul_pd(x, d), set1(-0.0));
    __m256d pr = zr, pi = zi;
    for (int p = 1; p < power; ++p) {
      const __m256d nr = _mm256_fmsub_pd(pr, zr, _mm256_mul_pd(pi, zi));
      pi = _mm256_fmadd_pd(pr, zi, _mm256_mul_pd(pi, zr));
      pr = nr;
    }
    const __m256d w = montgomery_weight(u);
    acc_re = _mm256_fmadd_pd(w, pr, acc_re);
    acc_im = _mm256_fmadd_pd(w, pi, acc_im);
  }
  return std::complex<double>(hsum(acc_re), hsum(acc_im)) +
         scalar::poisson_power_row(base, others.subspan(body), scale, b, power);
}

}  // namespace zetalab::simd::avx2
