#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>

#include "oracle_values.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/zero_catalog.hpp"
#include "zetalab/zeta_engine.hpp"

using namespace zetalab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("zetalab-test-" + std::to_string(std::rand()) + "-" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

void write(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

const ZeroTable& table5000() {
  static const ZeroTable t = find_zeros(5000.0);
  return t;
}

}  // namespace

TEST_CASE("first zeros match mpmath") {
  const ZeroTable z = find_zeros(100.0);
  REQUIRE(z.ordinates.size() == 29);
  for (std::size_t i = 0; i < 29; ++i) CHECK(std::abs(z.ordinates[i] - oracle::kFirstZeros[i]) < 1e-8);
  CHECK(z.ordinates[0] >= 14.134);
  CHECK(z.ordinates[0] <= 14.135);
  CHECK(std::abs(hardy_z(z.ordinates[0])) <= 1e-6);
  CHECK(z.source == ZeroSource::computed);
}

TEST_CASE("higher zeros by index match mpmath") {
  const ZeroTable& z = table5000();
  for (const auto& o : oracle::kHigherZeros) {
    CAPTURE(o.index);
    REQUIRE(z.ordinates.size() >= static_cast<std::size_t>(o.index));
    CHECK(std::abs(z.ordinates[o.index - 1] - o.gamma) < 1e-8);
  }
}

TEST_CASE("small tables") {
  CHECK(find_zeros(50.0).ordinates.size() == 10);
  const ZeroTable z25 = find_zeros(25.0);
  CHECK(z25.ordinates.size() == 2);
  CHECK_THROWS_AS(find_zeros(19.0), DomainError);
  CHECK_THROWS_AS(find_zeros(6001.0), DomainError);
}

TEST_CASE("counts against Riemann-von Mangoldt") {
  CHECK(riemann_von_mangoldt(100.0) ==
        doctest::Approx(100.0 / (2 * std::numbers::pi) * std::log(100.0 / (2 * std::numbers::pi * std::numbers::e)) +
                        0.875));
  for (double t : {100.0, 500.0, 1000.0, 5000.0}) {
    ZeroTable z;
    z.t_max = t;
    const auto g = table5000().up_to(t);
    z.ordinates.assign(g.begin(), g.end());
    const CountReport r = verify_counts(z);
    CAPTURE(t);
    CHECK(r.pass);
    CHECK(std::abs(r.actual - r.expected) <= 2.0);
  }
  ZeroTable one;
  one.t_max = 100.0;
  one.ordinates = {14.134725141734};
  CHECK_FALSE(verify_counts(one).pass);
}

TEST_CASE("spacing") {
  const auto g = table5000().up_to(1000.0);
  double min_gap = 1e9, sum = 0.0;
  int n = 0;
  for (std::size_t i = 1; i < g.size(); ++i) {
    min_gap = std::min(min_gap, g[i] - g[i - 1]);
    if (g[i - 1] > 500.0) {
      sum += g[i] - g[i - 1];
      ++n;
    }
  }
  CHECK(min_gap > 0.0);
  const double mean = sum / n, expect = 2 * std::numbers::pi / std::log(1000.0 / (2 * std::numbers::pi));
  CHECK(std::abs(mean / expect - 1.0) < 0.15);
}

TEST_CASE("import parses plain and commented files") {
  TempDir dir;
  write(dir.path / "a.txt", "14.134725141734\n21.022039638771\n");
  ZeroTable t = import_zeros(dir.path / "a.txt");
  CHECK(t.ordinates.size() == 2);
  CHECK(t.t_max == 21.022039638771);
  CHECK(t.source == ZeroSource::imported);
  CHECK(t.precision == 1e-9);

  write(dir.path / "b.txt", "# comment\n14.13\n");
  CHECK(import_zeros(dir.path / "b.txt").ordinates.size() == 1);

  write(dir.path / "c.txt", "# precision=1e-6\n\n  14.13  \r\n25.01\n");
  t = import_zeros(dir.path / "c.txt");
  CHECK(t.precision == 1e-6);
  CHECK(t.ordinates.size() == 2);
}

TEST_CASE("import errors carry line numbers") {
  TempDir dir;
  write(dir.path / "order.txt", "21.0\n14.1\n");
  try {
    import_zeros(dir.path / "order.txt");
    FAIL("expected OrderError");
  } catch (const OrderError& e) {
    CHECK(e.line() == 2);
  }
  write(dir.path / "parse.txt", "# x\n14.1\nfoo\n");
  try {
    import_zeros(dir.path / "parse.txt");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  write(dir.path / "neg.txt", "-3.0\n");
  CHECK_THROWS_AS(import_zeros(dir.path / "neg.txt"), RangeError);
  write(dir.path / "dup.txt", "14.1\n14.1\n");
  CHECK_THROWS_AS(import_zeros(dir.path / "dup.txt"), OrderError);
  CHECK_THROWS_AS(import_zeros(dir.path / "missing.txt"), IoError);
}

TEST_CASE("export round trip") {
  TempDir dir;
  const ZeroTable z = find_zeros(50.0);
  export_zeros(z, dir.path / "z.txt");
  const ZeroTable back = import_zeros(dir.path / "z.txt");
  CHECK(back.ordinates == z.ordinates);
  CHECK(back.t_max == z.t_max);

  ZeroTable empty;
  empty.t_max = 30.0;
  export_zeros(empty, dir.path / "e.txt");
  CHECK(import_zeros(dir.path / "e.txt").ordinates.empty());

  CHECK_THROWS_AS(export_zeros(z, dir.path / "no-such-dir" / "z.txt"), IoError);
}

TEST_CASE("imported reference ordinates match computed ones") {
  TempDir dir;
  std::string text = "# reference\n";
  char buf[64];
  for (double g : oracle::kFirstZeros) {
    std::snprintf(buf, sizeof buf, "%.15f\n", g);
    text += buf;
  }
  write(dir.path / "ref.txt", text);
  const ZeroTable ref = import_zeros(dir.path / "ref.txt");
  const auto computed = table5000().up_to(ref.t_max);
  REQUIRE(computed.size() == ref.ordinates.size());
  for (std::size_t i = 0; i < computed.size(); ++i) CHECK(std::abs(computed[i] - ref.ordinates[i]) < 1e-6);
}

TEST_CASE("cache reuse and coverage") {
  TempDir dir;
  const ZeroTable first = load_or_compute(120.0, dir.path);
  CHECK(fs::exists(dir.path / "zeros-tmax-120.000000.txt"));
  const ZeroTable second = load_or_compute(120.0, dir.path);
  CHECK(second.ordinates == first.ordinates);
  CHECK(second.source == ZeroSource::computed);
  CHECK_NOTHROW(require_coverage(first, 120.0));
  CHECK_THROWS_AS(require_coverage(first, 121.0), CoverageError);
}
