#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

namespace zetalab {

enum class ZeroSource { computed, imported };

/// Ordinates of nontrivial zeros in (0, t_max], strictly increasing. Every
/// zero is taken to be simple.
struct ZeroTable {
  std::vector<double> ordinates;
  double t_max = 0.0;
  ZeroSource source = ZeroSource::computed;
  double precision = 1e-9;

  /// Ordinates <= T.
  std::span<const double> up_to(double T) const;
};

struct CountReport {
  double expected = 0.0;
  long actual = 0;
  bool pass = false;
};

/// Smooth Riemann-von Mangoldt count (t/2pi) log(t/(2 pi e)) + 7/8.
double riemann_von_mangoldt(double t);

/// Locates all zeros in (0, t_max] from sign changes of Hardy's Z, 20 <= t_max <= 6000.
ZeroTable find_zeros(double t_max);

ZeroTable import_zeros(const std::filesystem::path& path);
void export_zeros(const ZeroTable& table, const std::filesystem::path& path);
CountReport verify_counts(const ZeroTable& table);

/// $ZETALAB_CACHE, or ./zetalab-cache.
std::filesystem::path default_cache_dir();

/// Reads the cached table for t_max from cache_dir, computing and storing it
/// on a miss.
ZeroTable load_or_compute(double t_max, const std::filesystem::path& cache_dir);

/// Throws CoverageError unless table.t_max >= T.
void require_coverage(const ZeroTable& table, double T);

}  // namespace zetalab
