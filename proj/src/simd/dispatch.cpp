#include <atomic>

#include "zetalab/errors.hpp"
#include "zetalab/simd/kernels.hpp"

namespace zetalab::simd {

namespace {

bool host_has_avx2() {
#if defined(ZETALAB_WITH_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect() { return host_has_avx2() ? Backend::avx2 : Backend::scalar; }

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

bool use_avx2() { return current().load(std::memory_order_relaxed) == Backend::avx2; }

}  // namespace

bool backend_available(Backend backend) {
  return backend == Backend::scalar || host_has_avx2();
}

Backend active_backend() { return current().load(); }

void set_backend(Backend backend) {
  if (!backend_available(backend)) {
    throw UnsupportedError(std::string("SIMD backend not available on this host: ") +
                           std::string(backend_name(backend)));
  }
  current().store(backend);
}

std::string_view backend_name(Backend backend) {
  return backend == Backend::avx2 ? "avx2" : "scalar";
}

#if defined(ZETALAB_WITH_AVX2)
#define ZETALAB_DISPATCH(fn, ...) (use_avx2() ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define ZETALAB_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void dirichlet_power_sums(std::span<const double> log_n, double sigma, double t,
                          std::span<std::complex<double>> out) {
  ZETALAB_DISPATCH(dirichlet_power_sums, log_n, sigma, t, out);
}

void dirichlet_line_sums(std::span<const double> log_n, std::span<const double> amplitude,
                         double t0, double dt, std::size_t steps, std::size_t orders,
                         std::span<std::complex<double>> out) {
  ZETALAB_DISPATCH(dirichlet_line_sums, log_n, amplitude, t0, dt, steps, orders, out);
}

double pair_cosine_row(double base, std::span<const double> others, double xi) {
  return ZETALAB_DISPATCH(pair_cosine_row, base, others, xi);
}

void pair_cosine_row_sweep(double base, std::span<const double> others, double xi0, double dxi,
                           std::span<double> out) {
  ZETALAB_DISPATCH(pair_cosine_row_sweep, base, others, xi0, dxi, out);
}

std::complex<double> poisson_power_row(double base, std::span<const double> others, double scale,
                                       double b, int power) {
  return ZETALAB_DISPATCH(poisson_power_row, base, others, scale, b, power);
}

#undef ZETALAB_DISPATCH

#if !defined(ZETALAB_WITH_AVX2)
// Stubs so the avx2:: symbols always link; set_backend never selects them.
namespace avx2 {
[[noreturn]] static void missing() { throw UnsupportedError("built without AVX2 support"); }
void dirichlet_power_sums(std::span<const double>, double, double,
                          std::span<std::complex<double>>) { missing(); }
void dirichlet_line_sums(std::span<const double>, std::span<const double>, double, double,
                         std::size_t, std::size_t, std::span<std::complex<double>>) { missing(); }
double pair_cosine_row(double, std::span<const double>, double) { missing(); }
void pair_cosine_row_sweep(double, std::span<const double>, double, double, std::span<double>) {
  missing();
}
std::complex<double> poisson_power_row(double, std::span<const double>, double, double, int) {
  missing();
}
void sincos_array(std::span<const double>, std::span<double>, std::span<double>) { missing(); }
void exp_array(std::span<const double>, std::span<double>) { missing(); }
}  // namespace avx2
#endif

}  // namespace zetalab::simd
