#include "aqrm/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "aqrm/fock.hpp"
#include "aqrm/render.hpp"
#include "aqrm/scan.hpp"
#include "aqrm/solver.hpp"

namespace aqrm {

namespace {

std::string fmt(double v, const char* spec = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// Writes to the path when given, otherwise to `out`.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open output file '" + path + "'");
  f << text;
  if (!f) throw std::invalid_argument("failed writing output file '" + path + "'");
}

void print_report(const Report& rep, std::ostream& out) {
  for (const CheckItem& item : rep.items) {
    out << (item.pass ? "[PASS] " : "[FAIL] ") << item.name;
    if (!item.detail.empty()) out << " -- " << item.detail;
    out << '\n';
  }
}

nlohmann::json report_json(const Report& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckItem& item : rep.items)
    checks.push_back(
        {{"name", item.name}, {"pass", item.pass}, {"detail", item.detail}});
  return {{"checks", checks}, {"all_pass", rep.all_pass()}};
}

struct CoeffsOpts {
  int n = 0;
  std::string format = "latex";
  std::string out_path;
};

struct VerifyOpts {
  int n = 0;
  std::string mode = "symbolic";
  double delta = 0.7;
  double g = 0.5;
  int dim = 120;
  int margin = -1;
  double tol = 1e-10;
  bool as_json = false;
  std::string out_path;
};

struct FitOpts {
  int n = 0;
  double delta = 0.0;
  double g = 0.0;
  int dim = 120;
  int margin = -1;
  int pairs = 0;
  double cond_bound = 1e12;
  bool as_json = false;
  std::string out_path;
};

struct ScanOpts {
  int n = -1;
  double eps = 0.0;
  bool eps_given = false;
  bool gap_only = false;
  std::string param = "g";
  double fixed_delta = 0.0;
  double fixed_g = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 64;
  int dim = 120;
  int margin = -1;
  int levels = 12;
  double gap_tol = 1e-8;
  double refine_tol = 1e-12;
  std::string csv_path;
  std::string json_path;
};

TruncParams params_for(int bias, int dim, int margin, double delta, double g) {
  TruncParams p = make_params(bias, dim, delta, g);
  if (margin >= 0) p.margin = margin;
  return p;
}

int run_coeffs(const CoeffsOpts& o, std::ostream& out) {
  const CoeffTables t = build_tables(o.n);
  emit(o.out_path, render_tables(t, o.format), out);
  return 0;
}

int run_verify(const VerifyOpts& o, std::ostream& out) {
  Report rep;
  if (o.mode == "symbolic") {
    const CoeffTables t = build_tables(o.n);
    for (Report part : {check_invariants(t), verify_defining_equations(t),
                        verify_closed_forms(t)})
      rep.items.insert(rep.items.end(), part.items.begin(), part.items.end());
  } else {
    const TruncParams p = params_for(o.n, o.dim, o.margin, o.delta, o.g);
    p.validate();
    const CoeffTables t = build_tables(o.n);
    const Matrix j = build_j(t, p);
    const Matrix h = build_h(p);
    const CommutatorCheck c = interior_commutator(j, h, p.dim, p.margin);
    rep.items.push_back({"interior commutator |[J,H]| / (|J||H|) < tol",
                         c.relative() < o.tol,
                         "relative norm " + fmt(c.relative(), "%.3e")});
    const double sym = interior(j - j.transpose(), p.dim, p.margin).norm() /
                       std::max(c.j_norm, 1e-300);
    rep.items.push_back({"interior symmetry |J - J^T| / |J| < tol",
                         sym < o.tol, "relative norm " + fmt(sym, "%.3e")});
  }
  std::string text;
  if (o.as_json) {
    text = report_json(rep).dump(2) + "\n";
  } else {
    std::ostringstream os;
    print_report(rep, os);
    os << (rep.all_pass() ? "all checks passed\n" : "verification FAILED\n");
    text = os.str();
  }
  emit(o.out_path, text, out);
  return rep.all_pass() ? 0 : 2;
}

int run_fitj2(const FitOpts& o, std::ostream& out) {
  const TruncParams p = params_for(o.n, o.dim, o.margin, o.delta, o.g);
  p.validate();
  const CoeffTables t = build_tables(o.n);
  const Matrix j = build_j(t, p);
  const Matrix h = build_h(p);
  const J2Fit fit = fit_j_squared_poly(j, h, o.n, o.pairs, o.cond_bound);

  const double expect_sub =
      o.n >= 1 ? expected_subleading_coeff(o.n, o.delta, o.g) : 0.0;
  std::string text;
  if (o.as_json) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int i = 0; i < fit.coeffs.size(); ++i) coeffs.push_back(fit.coeffs(i));
    nlohmann::json doc = {{"coeffs", coeffs},
                          {"cond", fit.cond},
                          {"max_residual", fit.max_residual},
                          {"expected_leading", 1.0}};
    if (o.n >= 1) doc["expected_subleading"] = expect_sub;
    text = doc.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (int i = 0; i < fit.coeffs.size(); ++i)
      os << "x[" << i << "] = " << fmt(fit.coeffs(i)) << '\n';
    os << "cond = " << fmt(fit.cond, "%.6g") << '\n';
    os << "max_residual = " << fmt(fit.max_residual, "%.3e") << '\n';
    os << "expected x[" << o.n << "] = 1 (error "
       << fmt(std::abs(fit.coeffs(o.n) - 1.0), "%.3e") << ")\n";
    if (o.n >= 1)
      os << "expected x[" << o.n - 1 << "] = " << fmt(expect_sub) << " (error "
         << fmt(std::abs(fit.coeffs(o.n - 1) - expect_sub), "%.3e") << ")\n";
    text = os.str();
  }
  emit(o.out_path, text, out);
  return 0;
}

int run_scan(const ScanOpts& o, std::ostream& out) {
  if ((o.n >= 0) == o.eps_given)
    throw std::invalid_argument("scan: give exactly one of --n or --eps");
  const bool with_parity = o.n >= 0 && !o.gap_only;

  TruncParams base;
  base.bias = std::max(o.n, 0);
  base.dim = o.dim;
  base.margin = o.margin >= 0 ? o.margin : base.bias + 6;
  base.delta_val = o.fixed_delta;
  base.g_val = o.fixed_g;

  ScanAxis axis;
  axis.param = o.param == "g" ? ScanParam::g : ScanParam::delta;
  axis.lo = o.lo;
  axis.hi = o.hi;
  axis.steps = o.steps;

  ScanConfig cfg;
  cfg.levels = o.levels;
  cfg.gap_tol = o.gap_tol;
  cfg.refine_tol = o.refine_tol;
  cfg.bias_value = o.n >= 0 ? double(o.n) : o.eps;
  cfg.with_parity = with_parity;

  std::optional<CoeffTables> tables;
  if (with_parity) tables = build_tables(o.n);

  const SpectrumScan scan = scan_crossings(tables, base, axis, cfg);

  if (!o.csv_path.empty()) {
    std::ostringstream os;
    write_spectrum_csv(os, scan);
    emit(o.csv_path, os.str(), out);
  }
  if (!o.json_path.empty())
    emit(o.json_path, crossings_to_json(scan).dump(2) + "\n", out);

  size_t true_count = 0;
  for (const CrossingRecord& rec : scan.crossings) true_count += rec.is_true;
  out << "scan: " << scan.grid.size() << " grid points, "
      << scan.crossings.size() << " gap minima, " << true_count
      << " true crossing(s)\n";
  for (const CrossingRecord& rec : scan.crossings)
    out << "  " << rec.classification() << " levels (" << rec.level << ","
        << rec.level + 1 << ") at " << scan_param_name(rec.param) << " = "
        << fmt(rec.value, "%.10g") << ", gap " << fmt(rec.gap, "%.3e") << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Conserved-operator toolkit for the asymmetric quantum Rabi "
               "model at integer bias"};
  app.set_config("--config", "", "Read options from an INI-style file");
  app.require_subcommand(1);

  CoeffsOpts co;
  CLI::App* coeffs = app.add_subcommand(
      "coeffs", "Build the symbolic coefficient tables and print them");
  coeffs->add_option("--n", co.n, "Integer bias N")
      ->required()
      ->check(CLI::NonNegativeNumber);
  coeffs->add_option("--format", co.format, "Output format")
      ->check(CLI::IsMember({"json", "latex"}))
      ->capture_default_str();
  coeffs->add_option("--out", co.out_path, "Write to a file instead of stdout");

  VerifyOpts vo;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check the defining equations symbolically or numerically");
  verify->add_option("--n", vo.n, "Integer bias N")
      ->required()
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--mode", vo.mode, "Verification mode")
      ->check(CLI::IsMember({"symbolic", "numeric"}))
      ->capture_default_str();
  verify->add_option("--delta", vo.delta, "Qubit splitting Delta (numeric mode)")
      ->capture_default_str();
  verify->add_option("--g", vo.g, "Coupling g (numeric mode)")
      ->capture_default_str();
  verify->add_option("--dim", vo.dim, "Fock levels per block")
      ->envname("AQRM_DIM")
      ->capture_default_str();
  verify->add_option("--margin", vo.margin,
                     "Interior projection margin (default N + 6)");
  verify->add_option("--tol", vo.tol, "Relative tolerance (numeric mode)")
      ->envname("AQRM_TOL")
      ->capture_default_str();
  verify->add_flag("--json", vo.as_json, "Emit the report as JSON");
  verify->add_option("--out", vo.out_path, "Write to a file instead of stdout");

  FitOpts fo;
  CLI::App* fitj2 = app.add_subcommand(
      "fitj2", "Fit J^2 as a polynomial in H on the lowest eigenpairs");
  fitj2->add_option("--n", fo.n, "Integer bias N")
      ->required()
      ->check(CLI::NonNegativeNumber);
  fitj2->add_option("--delta", fo.delta, "Qubit splitting Delta")->required();
  fitj2->add_option("--g", fo.g, "Coupling g")->required();
  fitj2->add_option("--dim", fo.dim, "Fock levels per block")
      ->envname("AQRM_DIM")
      ->capture_default_str();
  fitj2->add_option("--margin", fo.margin,
                    "Interior projection margin (default N + 6)");
  fitj2->add_option("--pairs", fo.pairs,
                    "Eigenpairs to fit (default 4 (N + 1))");
  fitj2->add_option("--cond-bound", fo.cond_bound,
                    "Reject fits above this condition number")
      ->envname("AQRM_COND_BOUND")
      ->capture_default_str();
  fitj2->add_flag("--json", fo.as_json, "Emit the result as JSON");
  fitj2->add_option("--out", fo.out_path, "Write to a file instead of stdout");

  ScanOpts so;
  CLI::App* scan = app.add_subcommand(
      "scan", "Scan the spectrum along g or Delta and classify level "
              "degeneracies");
  scan->add_option("--n", so.n,
                   "Integer bias N (enables parity classification)")
      ->check(CLI::NonNegativeNumber);
  scan->add_option("--eps", so.eps, "Real bias (gap-only scans)");
  scan->add_flag("--gap-only", so.gap_only,
                 "Classify by gap alone, without parity labels");
  scan->add_option("--param", so.param, "Scanned parameter")
      ->check(CLI::IsMember({"g", "delta"}))
      ->capture_default_str();
  scan->add_option("--delta", so.fixed_delta, "Fixed Delta (when scanning g)");
  scan->add_option("--g", so.fixed_g, "Fixed g (when scanning delta)");
  scan->add_option("--lo", so.lo, "Scan range start")->required();
  scan->add_option("--hi", so.hi, "Scan range end")->required();
  scan->add_option("--steps", so.steps, "Grid points (>= 16)")
      ->capture_default_str();
  scan->add_option("--dim", so.dim, "Fock levels per block")
      ->envname("AQRM_DIM")
      ->capture_default_str();
  scan->add_option("--margin", so.margin,
                   "Interior projection margin (default N + 6)");
  scan->add_option("--levels", so.levels, "Tracked levels")
      ->capture_default_str();
  scan->add_option("--gap-tol", so.gap_tol,
                   "Gap below which a minimum counts as degenerate")
      ->envname("AQRM_GAP_TOL")
      ->capture_default_str();
  scan->add_option("--refine-tol", so.refine_tol,
                   "Parameter resolution of the refinement")
      ->capture_default_str();
  scan->add_option("--out-csv", so.csv_path, "Spectrum CSV output path");
  scan->add_option("--out-json", so.json_path, "Crossing JSON output path");

  // Build a classic argv so parsing order matches the shell's.
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("aqrm");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 64;
  }

  try {
    so.eps_given = scan->count("--eps") > 0;
    if (coeffs->parsed()) return run_coeffs(co, out);
    if (verify->parsed()) return run_verify(vo, out);
    if (fitj2->parsed()) return run_fitj2(fo, out);
    return run_scan(so, out);
  } catch (const Inconsistent& e) {
    err << "inconsistency: " << e.what() << '\n';
    return 2;
  } catch (const NotDivisible& e) {
    err << "inconsistency: " << e.what() << '\n';
    return 2;
  } catch (const IllConditioned& e) {
    err << "configuration error: " << e.what() << '\n';
    return 64;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 64;
  }
}

}  // namespace aqrm
