#include "zetalab/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "zetalab/csv.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/moments.hpp"
#include "zetalab/numerics/parallel.hpp"
#include "zetalab/pair_correlation.hpp"
#include "zetalab/predictions.hpp"
#include "zetalab/zero_catalog.hpp"

namespace zetalab {

namespace {

namespace fs = std::filesystem;
using csv::number;

struct Globals {
  unsigned threads = 0;
  std::string cache;
};

struct MomentRow {
  int k;
  double a;
  std::optional<MomentEstimate> quad, zeros, from_f;
};

void check_lists(const std::vector<int>& ks, const std::vector<double>& as) {
  for (int k : ks) {
    if (k < 0 || k > 4) throw DomainError("k values must lie in [0, 4]");
  }
  for (double a : as) {
    if (!(a >= 0.1 && a <= 5.0)) throw DomainError("a values must lie in [0.1, 5]");
  }
}

fs::path cache_dir(const Globals& g) { return g.cache.empty() ? default_cache_dir() : fs::path(g.cache); }

ZeroTable zeros_for(const Globals& g, double t_max) {
  if (t_max > 6000.0) throw CoverageError("zero tables are limited to t_max <= 6000");
  return load_or_compute(t_max, cache_dir(g));
}

std::string ratio(const std::optional<MomentEstimate>& num, const std::optional<MomentEstimate>& den) {
  if (!num || !den || den->value == 0.0) return "";
  return number(num->value / den->value);
}

std::string opt_value(const std::optional<MomentEstimate>& m) { return m ? number(m->value) : ""; }

std::vector<MomentRow> compute_moments(const ZeroTable& zeros, double T, const std::vector<int>& ks,
                                       const std::vector<double>& as, bool quad, bool pairs, bool from_f,
                                       double alpha_max, double step) {
  std::optional<FGrid> grid;
  if (from_f) grid = f_grid(zeros, T, alpha_max, step);
  int kmax = 0;
  for (int k : ks) kmax = std::max(kmax, k);
  std::vector<MomentRow> rows;
  for (double a : as) {
    std::vector<MomentEstimate> q;
    if (quad) q = i_k_quadrature_all(kmax, a, T, zeros);
    for (int k : ks) {
      MomentRow row{k, a, {}, {}, {}};
      if (quad) row.quad = q[k];
      if (pairs) row.zeros = i_k_from_zeros(k, a, T, zeros);
      if (from_f) row.from_f = i_k_from_f(k, a, T, *grid);
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<csv::Row> moment_rows(const std::vector<MomentRow>& rows, double T) {
  std::vector<csv::Row> out;
  const double L = std::log(T);
  for (const auto& r : rows) {
    const double predicted = coefficient_c(r.k, r.a).value * T * std::pow(L, 2 * r.k + 2);
    out.push_back({std::to_string(r.k), number(r.a), number(T), opt_value(r.quad), opt_value(r.zeros),
                   opt_value(r.from_f), number(predicted), ratio(r.zeros, r.quad), ratio(r.from_f, r.quad),
                   ratio(r.from_f, r.zeros)});
  }
  return out;
}

const csv::Row kMomentHeader = {"k",         "a",          "T",          "I_quad",        "I_zeros",
                                "I_fromF",   "c_k_T_logT", "zeros_over_quad", "fromF_over_quad",
                                "fromF_over_zeros"};
const csv::Row kDiscreteHeader = {"k", "a", "T", "two_pi_D_2a", "I_quad", "ratio", "D_imag", "D_err"};

std::vector<csv::Row> discrete_rows(const ZeroTable& zeros, double T, const std::vector<int>& ks,
                                    const std::vector<double>& as) {
  int kmax = 0;
  for (int k : ks) kmax = std::max(kmax, k);
  std::vector<csv::Row> out;
  for (double a : as) {
    const auto quad = i_k_quadrature_all(kmax, a, T, zeros);
    for (int k : ks) {
      const MomentEstimate d = d_k(k, 2.0 * a, T, zeros);
      std::string r;
      try {
        r = number(farmer_ratio(quad[k], d));
      } catch (const DivisionError&) {
        r = "";
      }
      out.push_back({std::to_string(k), number(a), number(T), number(2.0 * std::numbers::pi * d.value),
                     number(quad[k].value), r, number(d.imag_part), number(d.err_estimate)});
    }
  }
  return out;
}

std::vector<csv::Row> identity_rows(int kmax, const std::vector<double>& as) {
  std::vector<csv::Row> out;
  for (int k = 0; k <= kmax; ++k) {
    for (double a : as) {
      out.push_back({std::to_string(k), number(a), number(gr_identity_residual(k, a))});
    }
  }
  return out;
}

std::vector<csv::Row> ftable_rows(const FGrid& grid) {
  std::vector<csv::Row> out;
  for (std::size_t i = 0; i < grid.alphas.size(); ++i) {
    out.push_back({number(grid.alphas[i]), number(grid.values[i])});
  }
  return out;
}

void emit(std::ostream& out, const std::string& path, const csv::Row& header, const std::vector<csv::Row>& rows) {
  if (path.empty() || path == "-") {
    csv::write(out, header, rows);
  } else {
    csv::write_file(path, header, rows);
  }
}

}  // namespace

int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"zetalab: zeros, pair correlation and log-derivative moments of the Riemann zeta function"};
  app.name("zetalab");
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--threads", globals.threads, "Worker thread cap (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--cache", globals.cache, "Zero table cache directory (default $ZETALAB_CACHE or ./zetalab-cache)");

  // zeros
  auto* zeros_cmd = app.add_subcommand("zeros", "Compute or import a zero table");
  double z_tmax = 0.0;
  std::string z_import, z_out;
  auto* z_tmax_opt = zeros_cmd->add_option("--tmax", z_tmax, "Height to compute zeros up to");
  auto* z_import_opt = zeros_cmd->add_option("--import", z_import, "Zeros file to read instead");
  z_tmax_opt->excludes(z_import_opt);
  zeros_cmd->add_option("--out", z_out, "Write the table to this file");

  // ftable
  auto* ftable_cmd = app.add_subcommand("ftable", "Tabulate F(alpha, T)");
  double f_tmax = 0.0, f_alpha_max = 0.0, f_step = 0.0;
  std::string f_out;
  ftable_cmd->add_option("--tmax", f_tmax, "T")->required();
  ftable_cmd->add_option("--alpha-max", f_alpha_max, "Largest alpha")->required();
  ftable_cmd->add_option("--step", f_step, "Alpha step")->required();
  ftable_cmd->add_option("--out", f_out, "CSV output path")->required();

  // moments
  auto* moments_cmd = app.add_subcommand("moments", "Compute I_k(a, T) by up to three methods");
  std::vector<int> m_k;
  std::vector<double> m_a;
  double m_tmax = 0.0, m_alpha_max = 6.0, m_step = 0.02;
  std::string m_method = "all", m_out;
  moments_cmd->add_option("--k", m_k, "k values")->required()->delimiter(',');
  moments_cmd->add_option("--a", m_a, "a values")->required()->delimiter(',');
  moments_cmd->add_option("--tmax", m_tmax, "T")->required();
  moments_cmd->add_option("--method", m_method, "quad|zeros|fromF|all")
      ->check(CLI::IsMember({"quad", "zeros", "fromF", "all"}));
  moments_cmd->add_option("--alpha-max", m_alpha_max, "F grid extent for fromF");
  moments_cmd->add_option("--step", m_step, "F grid step for fromF");
  moments_cmd->add_option("--out", m_out, "CSV output path (default stdout)");

  // discrete
  auto* discrete_cmd = app.add_subcommand("discrete", "Compare 2 pi D_k(2a, T) with I_k(a, T)");
  std::vector<int> d_k_list;
  std::vector<double> d_a;
  double d_tmax = 0.0;
  std::string d_out;
  discrete_cmd->add_option("--k", d_k_list, "k values")->required()->delimiter(',');
  discrete_cmd->add_option("--a", d_a, "a values")->required()->delimiter(',');
  discrete_cmd->add_option("--tmax", d_tmax, "T")->required();
  discrete_cmd->add_option("--out", d_out, "CSV output path (default stdout)");

  // predict
  auto* predict_cmd = app.add_subcommand("predict", "Predicted coefficients c_k(a) and d_k(a)");
  int p_k = 0;
  double p_a = 0.0;
  predict_cmd->add_option("--k", p_k, "k")->required();
  predict_cmd->add_option("--a", p_a, "a")->required();

  // identity
  auto* identity_cmd = app.add_subcommand("identity", "Gamma-integral identity residuals");
  int i_kmax = 4;
  identity_cmd->add_option("--kmax", i_kmax, "Largest k")->required();

  // tauberian
  auto* tauberian_cmd = app.add_subcommand("tauberian", "Weighted-integral vs window-average comparison");
  double t_tmax = 0.0, t_b = 0.0, t_alpha_max = 8.0, t_step = 0.02;
  int t_k = 0;
  tauberian_cmd->add_option("--tmax", t_tmax, "T")->required();
  tauberian_cmd->add_option("--k", t_k, "k")->required();
  tauberian_cmd->add_option("--b", t_b, "b")->required();
  tauberian_cmd->add_option("--alpha-max", t_alpha_max, "F grid extent");
  tauberian_cmd->add_option("--step", t_step, "F grid step");

  // report
  auto* report_cmd = app.add_subcommand("report", "Write ftable, moments, discrete and identity CSVs");
  std::vector<int> r_k;
  std::vector<double> r_a;
  double r_tmax = 0.0;
  std::string r_dir;
  report_cmd->add_option("--tmax", r_tmax, "T")->required();
  report_cmd->add_option("--k", r_k, "k values")->required()->delimiter(',');
  report_cmd->add_option("--a", r_a, "a values")->required()->delimiter(',');
  report_cmd->add_option("--out-dir", r_dir, "Output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    numerics::set_max_threads(globals.threads);
    if (zeros_cmd->parsed()) {
      if (z_tmax_opt->count() == 0 && z_import_opt->count() == 0) {
        err << "error: zeros needs --tmax or --import\n" << zeros_cmd->help();
        return 2;
      }
      const ZeroTable table = z_import.empty() ? zeros_for(globals, z_tmax) : import_zeros(z_import);
      if (!z_out.empty()) export_zeros(table, z_out);
      const CountReport rep = verify_counts(table);
      char line[160];
      std::snprintf(line, sizeof line, "%zu zeros, RvM expected %.2f, %s\n", table.ordinates.size(),
                    rep.expected, rep.pass ? "PASS" : "FAIL");
      out << line;
    } else if (ftable_cmd->parsed()) {
      const ZeroTable zeros = zeros_for(globals, f_tmax);
      emit(out, f_out, {"alpha", "F"}, ftable_rows(f_grid(zeros, f_tmax, f_alpha_max, f_step)));
    } else if (moments_cmd->parsed()) {
      check_lists(m_k, m_a);
      const ZeroTable zeros = zeros_for(globals, m_tmax);
      const bool all = m_method == "all";
      const auto rows = compute_moments(zeros, m_tmax, m_k, m_a, all || m_method == "quad",
                                        all || m_method == "zeros", all || m_method == "fromF", m_alpha_max,
                                        m_step);
      emit(out, m_out, kMomentHeader, moment_rows(rows, m_tmax));
    } else if (discrete_cmd->parsed()) {
      check_lists(d_k_list, d_a);
      const ZeroTable zeros = zeros_for(globals, d_tmax);
      emit(out, d_out, kDiscreteHeader, discrete_rows(zeros, d_tmax, d_k_list, d_a));
    } else if (predict_cmd->parsed()) {
      const auto c = coefficient_c(p_k, p_a);
      const auto d = coefficient_d(p_k, p_a);
      csv::write(out, {"k", "a", "coefficient_c", "coefficient_d"},
                 {{std::to_string(p_k), number(p_a), number(c.value), number(d.value)}});
    } else if (identity_cmd->parsed()) {
      if (i_kmax < 0 || i_kmax > 8) throw DomainError("identity: kmax must be in [0, 8]");
      csv::write(out, {"k", "a", "gr_residual"}, identity_rows(i_kmax, {0.25, 0.5, 1.0, 2.0, 4.0}));
    } else if (tauberian_cmd->parsed()) {
      const ZeroTable zeros = zeros_for(globals, t_tmax);
      const FGrid grid = f_grid(zeros, t_tmax, t_alpha_max, t_step);
      const TauberianReport rep = tauberian_compare(grid, t_k, t_b);
      std::vector<csv::Row> rows = {{"lhs_A", number(rep.lhs_A)},
                                    {"rhs_A", number(rep.rhs_A)},
                                    {"rhs_A_truncated", number(rep.rhs_A_truncated)},
                                    {"lhs_over_rhs", number(rep.lhs_A / rep.rhs_A)},
                                    {"sup_growth_ratio", number(rep.sup_growth_ratio)}};
      for (const auto& w : rep.window_averages) {
        rows.push_back({"window_" + number(w.c) + "_" + number(w.d), number(w.average)});
      }
      csv::write(out, {"quantity", "value"}, rows);
    } else if (report_cmd->parsed()) {
      check_lists(r_k, r_a);
      const ZeroTable zeros = zeros_for(globals, r_tmax);
      std::error_code ec;
      fs::create_directories(r_dir, ec);
      if (ec) throw IoError("cannot create " + r_dir + ": " + ec.message());
      const fs::path dir(r_dir);
      const FGrid grid = f_grid(zeros, r_tmax, 6.0, 0.02);
      csv::write_file(dir / "ftable.csv", {"alpha", "F"}, ftable_rows(grid));
      const auto rows = compute_moments(zeros, r_tmax, r_k, r_a, true, true, true, 6.0, 0.02);
      csv::write_file(dir / "moments.csv", kMomentHeader, moment_rows(rows, r_tmax));
      csv::write_file(dir / "discrete.csv", kDiscreteHeader, discrete_rows(zeros, r_tmax, r_k, r_a));
      int kmax = 0;
      for (int k : r_k) kmax = std::max(kmax, k);
      csv::write_file(dir / "identity.csv", {"k", "a", "gr_residual"}, identity_rows(kmax, r_a));
      out << "wrote ftable.csv, moments.csv, discrete.csv, identity.csv to " << dir.string() << "\n";
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace zetalab
