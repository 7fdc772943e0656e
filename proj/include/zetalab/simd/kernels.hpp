#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference version and,
// on x86-64 hosts with AVX2+FMA, a vectorized one; the active backend is picked
// once at startup from cpuid and can be overridden for testing.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace zetalab::simd {

enum class Backend { scalar, avx2 };

bool backend_available(Backend backend);
Backend active_backend();
/// Throws UnsupportedError if the backend cannot run on this host.
void set_backend(Backend backend);
std::string_view backend_name(Backend backend);

/// Scoped backend override, restoring the previous choice on destruction.
class BackendGuard {
 public:
  explicit BackendGuard(Backend backend) : previous_(active_backend()) { set_backend(backend); }
  ~BackendGuard() { set_backend(previous_); }
  BackendGuard(const BackendGuard&) = delete;
  BackendGuard& operator=(const BackendGuard&) = delete;

 private:
  Backend previous_;
};

// ---------------------------------------------------------------------------
// Dirichlet sums. log_n[i] holds log(i + 1).

/// out[j] = sum_i log_n[i]^j * exp(-(sigma + i t) log_n[i]) for j < out.size().
void dirichlet_power_sums(std::span<const double> log_n, double sigma, double t,
                          std::span<std::complex<double>> out);

/// The same sums along the vertical line sigma = const at t_m = t0 + m*dt,
/// m < steps, with amplitude[i] = exp(-sigma log_n[i]). Phases advance by a
/// per-term rotation and are recomputed exactly every kLineResync steps.
/// out is row-major: out[m * orders + j].
inline constexpr std::size_t kLineResync = 64;
void dirichlet_line_sums(std::span<const double> log_n, std::span<const double> amplitude,
                         double t0, double dt, std::size_t steps, std::size_t orders,
                         std::span<std::complex<double>> out);

// ---------------------------------------------------------------------------
// Zero-pair sums with Montgomery's weight w(u) = 4 / (4 + u^2), u = other - base.

/// sum_j w(u_j) cos(xi u_j)
double pair_cosine_row(double base, std::span<const double> others, double xi);

/// out[m] = sum_j w(u_j) cos((xi0 + m dxi) u_j) for m < out.size().
void pair_cosine_row_sweep(double base, std::span<const double> others, double xi0, double dxi,
                           std::span<double> out);

/// sum_j w(u_j) (b + i scale u_j)^(-power), power >= 1.
std::complex<double> poisson_power_row(double base, std::span<const double> others, double scale,
                                       double b, int power);

// ---------------------------------------------------------------------------
// Backend entry points, exposed so equivalence tests can call both directly.

namespace scalar {
void dirichlet_power_sums(std::span<const double> log_n, double sigma, double t,
                          std::span<std::complex<double>> out);
void dirichlet_line_sums(std::span<const double> log_n, std::span<const double> amplitude,
                         double t0, double dt, std::size_t steps, std::size_t orders,
                         std::span<std::complex<double>> out);
double pair_cosine_row(double base, std::span<const double> others, double xi);
void pair_cosine_row_sweep(double base, std::span<const double> others, double xi0, double dxi,
                           std::span<double> out);
std::complex<double> poisson_power_row(double base, std::span<const double> others, double scale,
                                       double b, int power);
}  // namespace scalar

namespace avx2 {
void dirichlet_power_sums(std::span<const double> log_n, double sigma, double t,
                          std::span<std::complex<double>> out);
void dirichlet_line_sums(std::span<const double> log_n, std::span<const double> amplitude,
                         double t0, double dt, std::size_t steps, std::size_t orders,
                         std::span<std::complex<double>> out);
double pair_cosine_row(double base, std::span<const double> others, double xi);
void pair_cosine_row_sweep(double base, std::span<const double> others, double xi0, double dxi,
                           std::span<double> out);
std::complex<double> poisson_power_row(double base, std::span<const double> others, double scale,
                                       double b, int power);

/// Vectorized elementary functions, exposed for accuracy tests.
void sincos_array(std::span<const double> x, std::span<double> sin_out, std::span<double> cos_out);
void exp_array(std::span<const double> x, std::span<double> out);
}  // namespace avx2

}  // namespace zetalab::simd
