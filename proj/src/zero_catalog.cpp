#include "zetalab/zero_catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <system_error>

#include "zetalab/errors.hpp"
#include "zetalab/numerics/parallel.hpp"
#include "zetalab/zeta_engine.hpp"

namespace zetalab {

namespace {

constexpr double kScanStart = 2.0;
constexpr double kCoarseStep = 0.05;
constexpr double kFineStep = 0.01;
constexpr double kBracketWidth = 1e-9;
constexpr std::size_t kBlock = 256;

double round12(double x) { return std::round(x * 1e12) / 1e12; }

double bisect(double lo, double hi, double z_lo) {
  while (hi - lo > kBracketWidth) {
    const double mid = 0.5 * (lo + hi);
    const double z_mid = hardy_z(mid);
    if (z_mid == 0.0) return mid;
    if ((z_mid < 0.0) == (z_lo < 0.0)) {
      lo = mid;
      z_lo = z_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Minimizes sign * Z on [lo, hi] by golden section; returns the abscissa.
double golden_min(double lo, double hi, double sign) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = sign * hardy_z(c), fd = sign * hardy_z(d);
  for (int it = 0; it < 40 && b - a > 1e-7; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = sign * hardy_z(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = sign * hardy_z(d);
    }
  }
  return 0.5 * (a + b);
}

struct Bracket {
  double lo, hi, z_lo;
};

std::vector<double> scan(double t_max, double step) {
  const auto n_steps = static_cast<std::size_t>(std::ceil((t_max - kScanStart) / step));
  std::vector<double> t(n_steps + 1), z(n_steps + 1);
  for (std::size_t i = 0; i <= n_steps; ++i) {
    t[i] = std::min(t_max, kScanStart + static_cast<double>(i) * step);
  }
  const std::size_t blocks = (t.size() + kBlock - 1) / kBlock;
  numerics::parallel_for(blocks, [&](std::size_t b) {
    const std::size_t end = std::min(t.size(), (b + 1) * kBlock);
    for (std::size_t i = b * kBlock; i < end; ++i) z[i] = hardy_z(t[i]);
  });

  std::vector<Bracket> brackets;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (z[i] == 0.0) {
      brackets.push_back({t[i], t[i], 0.0});
    } else if ((z[i] < 0.0) != (z[i + 1] < 0.0) && z[i + 1] != 0.0) {
      brackets.push_back({t[i], t[i + 1], z[i]});
    }
  }
  if (z.back() == 0.0) brackets.push_back({t.back(), t.back(), 0.0});

  // A local minimum of |Z| with no sign change may hide a close pair.
  std::vector<std::size_t> suspects;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    const bool same = (z[i - 1] < 0.0) == (z[i] < 0.0) && (z[i] < 0.0) == (z[i + 1] < 0.0);
    if (same && std::abs(z[i]) < std::abs(z[i - 1]) && std::abs(z[i]) < std::abs(z[i + 1])) {
      suspects.push_back(i);
    }
  }
  std::vector<std::vector<Bracket>> found(suspects.size());
  numerics::parallel_for(suspects.size(), [&](std::size_t q) {
    const std::size_t i = suspects[q];
    const double sign = z[i] < 0.0 ? -1.0 : 1.0;
    const double t_min = golden_min(t[i - 1], t[i + 1], sign);
    const double z_min = hardy_z(t_min);
    if (sign * z_min < 0.0) {
      found[q].push_back({t[i - 1], t_min, z[i - 1]});
      found[q].push_back({t_min, t[i + 1], z_min});
    }
  });
  for (const auto& f : found) brackets.insert(brackets.end(), f.begin(), f.end());
  std::sort(brackets.begin(), brackets.end(),
            [](const Bracket& x, const Bracket& y) { return x.lo < y.lo; });

  std::vector<double> roots(brackets.size());
  numerics::parallel_for(brackets.size(), [&](std::size_t q) {
    const Bracket& br = brackets[q];
    roots[q] = round12(br.lo == br.hi ? br.lo : bisect(br.lo, br.hi, br.z_lo));
  });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size() && std::isfinite(out);
}

struct Header {
  double t_max = -1.0;
  double precision = 1e-9;
  ZeroSource source = ZeroSource::imported;
};

ZeroTable read_table(const std::filesystem::path& path, Header& header) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open zeros file: " + path.string());
  ZeroTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      const std::string_view body = trim(text.substr(1));
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) continue;
      const std::string_view key = trim(body.substr(0, eq));
      const std::string_view value = trim(body.substr(eq + 1));
      double number = 0.0;
      if (key == "precision") {
        if (!parse_double(value, number) || number <= 0.0) {
          throw ParseError("bad precision value '" + std::string(value) + "'", line_no);
        }
        header.precision = number;
      } else if (key == "t_max") {
        if (!parse_double(value, number) || number <= 0.0) {
          throw ParseError("bad t_max value '" + std::string(value) + "'", line_no);
        }
        header.t_max = number;
      } else if (key == "source") {
        header.source = value == "computed" ? ZeroSource::computed : ZeroSource::imported;
      }
      continue;
    }
    double gamma = 0.0;
    if (!parse_double(text, gamma)) {
      throw ParseError("not a decimal ordinate: '" + std::string(text) + "'", line_no);
    }
    if (gamma <= 0.0) {
      throw RangeError("line " + std::to_string(line_no) + ": nonpositive ordinate");
    }
    if (!table.ordinates.empty() && gamma <= table.ordinates.back()) {
      throw OrderError("ordinates must be strictly increasing", line_no);
    }
    table.ordinates.push_back(gamma);
  }
  if (in.bad()) throw IoError("read failure on " + path.string());
  const double last = table.ordinates.empty() ? 0.0 : table.ordinates.back();
  if (header.t_max >= 0.0 && header.t_max < last) {
    throw RangeError("header t_max lies below the last ordinate");
  }
  table.t_max = header.t_max >= 0.0 ? header.t_max : last;
  table.precision = header.precision;
  return table;
}

std::string cache_name(double t_max) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "zeros-tmax-%.6f.txt", t_max);
  return buf;
}

}  // namespace

std::span<const double> ZeroTable::up_to(double T) const {
  const auto end = std::upper_bound(ordinates.begin(), ordinates.end(), T);
  return {ordinates.data(), static_cast<std::size_t>(end - ordinates.begin())};
}

double riemann_von_mangoldt(double t) {
  const double two_pi = 2.0 * std::numbers::pi;
  return t / two_pi * std::log(t / (two_pi * std::numbers::e)) + 7.0 / 8.0;
}

ZeroTable find_zeros(double t_max) {
  if (!(t_max >= 20.0 && t_max <= 6000.0)) throw DomainError("find_zeros: t_max must be in [20, 6000]");
  ZeroTable table;
  table.t_max = t_max;
  table.source = ZeroSource::computed;
  table.precision = kBracketWidth;
  table.ordinates = scan(t_max, kCoarseStep);
  if (!verify_counts(table).pass) {
    table.ordinates = scan(t_max, kFineStep);
    const CountReport report = verify_counts(table);
    if (!report.pass) {
      throw MissedZeroError("zero count " + std::to_string(report.actual) +
                            " disagrees with Riemann-von Mangoldt estimate " +
                            std::to_string(report.expected) + " after refinement");
    }
  }
  return table;
}

ZeroTable import_zeros(const std::filesystem::path& path) {
  Header header;
  ZeroTable table = read_table(path, header);
  table.source = ZeroSource::imported;
  return table;
}

void export_zeros(const ZeroTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write zeros file: " + path.string());
  char buf[64];
  out << "# zetalab zero table\n";
  out << "# source=" << (table.source == ZeroSource::computed ? "computed" : "imported") << '\n';
  std::snprintf(buf, sizeof buf, "# t_max=%.12f\n", table.t_max);
  out << buf;
  std::snprintf(buf, sizeof buf, "# precision=%.3g\n", table.precision);
  out << buf;
  out << "# count=" << table.ordinates.size() << '\n';
  for (double g : table.ordinates) {
    std::snprintf(buf, sizeof buf, "%.12f\n", g);
    out << buf;
  }
  out.flush();
  if (!out) throw IoError("write failure on " + path.string());
}

CountReport verify_counts(const ZeroTable& table) {
  CountReport report;
  report.actual = static_cast<long>(table.ordinates.size());
  if (!(table.t_max > 2.0 * std::numbers::pi)) {
    report.expected = 0.0;
    report.pass = report.actual == 0;
    return report;
  }
  report.expected = riemann_von_mangoldt(table.t_max);
  const double tolerance = std::max(2.0, 0.25 * std::log(table.t_max));
  report.pass = std::abs(static_cast<double>(report.actual) - report.expected) <= tolerance;
  return report;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("ZETALAB_CACHE"); env != nullptr && *env != '\0') return env;
  return std::filesystem::path("zetalab-cache");
}

ZeroTable load_or_compute(double t_max, const std::filesystem::path& cache_dir) {
  const std::filesystem::path file = cache_dir / cache_name(t_max);
  std::error_code ec;
  if (std::filesystem::exists(file, ec)) {
    Header header;
    ZeroTable table = read_table(file, header);
    table.source = header.source;
    if (std::abs(table.t_max - t_max) < 1e-9 && verify_counts(table).pass) {
      table.t_max = t_max;
      return table;
    }
  }
  ZeroTable table = find_zeros(t_max);
  std::filesystem::create_directories(cache_dir, ec);
  if (ec) throw IoError("cannot create cache directory " + cache_dir.string() + ": " + ec.message());
  const std::filesystem::path tmp = file.string() + ".tmp";
  export_zeros(table, tmp);
  std::filesystem::rename(tmp, file, ec);
  if (ec) throw IoError("cannot move cache file into place: " + ec.message());
  return table;
}

void require_coverage(const ZeroTable& table, double T) {
  if (table.t_max < T) {
    throw CoverageError("zero table covers t <= " + std::to_string(table.t_max) +
                        " but T = " + std::to_string(T) + " was requested");
  }
}

}  // namespace zetalab
