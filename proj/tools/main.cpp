// SPDX-License-Identifier: Apache-2.0
//
// Command line surface: every library operation as a subcommand, one
// JSON-lines record per computation (CSV with --format=csv).
// Exit codes: 0 success, 2 domain/validation error, 3 numerical fault.
#include <CLI11.hpp>

#include <cstdio>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rmtgap/asymptotics.hpp"
#include "rmtgap/constants.hpp"
#include "rmtgap/errors.hpp"
#include "rmtgap/fredholm.hpp"
#include "rmtgap/painleve.hpp"
#include "rmtgap/quadrature.hpp"
#include "rmtgap/report.hpp"
#include "rmtgap/rh_model.hpp"
#include "rmtgap/toeplitz.hpp"

namespace {

using namespace rmtgap;

struct Options {
  int n = 10;
  std::optional<double> alpha;
  std::optional<double> beta;
  double s = 1.0;
  double gamma = 1.0;
  int quad_order = 0;
  int digits = 0;  // 0 = auto
  double fd_step = 1e-4;
  std::string format = "jsonl";
  int jobs = 1;
  std::string n_spec, alpha_spec;
};

double resolve_alpha(const Options& opt, double fallback = M_PI / 2) {
  if (opt.alpha && opt.beta)
    throw CLI::ValidationError("--alpha and --beta are mutually exclusive");
  if (opt.beta) return M_PI - *opt.beta;
  return opt.alpha.value_or(fallback);
}

PrecisionConfig resolve_precision(const Options& opt, int n, double alpha) {
  if (opt.digits > 0) return PrecisionConfig::digits(opt.digits);
  return PrecisionConfig::digits(recommended_digits(n, alpha));
}

void emit(std::vector<ReportRecord>& out, const std::string& format) {
  if (format == "csv") {
    if (out.empty()) return;
    const auto cols = csv_columns(out.front());
    std::cout << csv_header(cols) << "\n";
    for (const auto& r : out) std::cout << csv_row(r, cols) << "\n";
  } else {
    for (const auto& r : out) std::cout << r.json_line() << "\n";
  }
}

ReportRecord run_constants() {
  ReportRecord rec;
  rec.command = "constants";
  const auto z = zeta_prime_minus1();
  rec.inputs["n_terms"] = z.terms_used;
  rec.set_output("zeta_prime_minus1", z.value, "constants");
  rec.set_output("zeta_tail_bound", z.tail_bound, "constants");
  rec.set_output("c0", widom_dyson_c0(), "constants");
  return rec;
}

ReportRecord run_toeplitz(const Options& opt, int n, double alpha) {
  ReportRecord rec;
  rec.command = "toeplitz";
  const ArcEnsemble ens(n, alpha);
  const auto prec = resolve_precision(opt, n, alpha);
  const auto det = log_det(ens, prec);
  rec.inputs["n"] = n;
  rec.inputs["alpha"] = alpha;
  rec.inputs["digits"] = prec.decimal_digits;
  rec.set_output("log_det", det.log_det, "toeplitz");
  rec.set_output("min_pivot", det.min_pivot, "toeplitz");
  rec.set_output("precision_ok", det.precision_ok, "toeplitz");
  rec.set_output("ratio_next", det.pivots.back(), "toeplitz");
  if (n <= 3) {
    const int m = opt.quad_order > 0 ? opt.quad_order : 80;
    rec.set_output("multiple_integral", multiple_integral_oracle(n, alpha, m), "toeplitz");
  }
  return rec;
}

ReportRecord run_fredholm(const Options& opt) {
  ReportRecord rec;
  rec.command = "fredholm";
  const GapSpec spec(opt.s, opt.gamma);
  const NystromConfig cfg{opt.quad_order};
  rec.inputs["s"] = opt.s;
  rec.inputs["gamma"] = opt.gamma;
  rec.inputs["m"] = cfg.order(opt.s);
  rec.set_output("log_det_gap", log_det_gap(spec, cfg), "fredholm");
  if (opt.gamma < 1.0)
    rec.set_output("trace_identity_residual", trace_identity_residual(spec, cfg, 24), "fredholm");
  return rec;
}

ReportRecord run_delta(const Options& opt, int n, double alpha) {
  ReportRecord rec;
  rec.command = "delta";
  rec.inputs["n"] = n;
  rec.inputs["alpha"] = alpha;
  rec.inputs["fd_step"] = opt.fd_step;
  rec.set_output("delta_determinant", delta_from_determinant(n, alpha, opt.fd_step), "rh-model");
  rec.set_output("delta_asymptotic", delta_asymptotic(n, alpha), "rh-model");
  return rec;
}

ReportRecord run_theta(const Options&, int n, double alpha) {
  ReportRecord rec;
  rec.command = "theta";
  rec.inputs["n"] = n;
  rec.inputs["alpha"] = alpha;
  rec.set_output("theta", theta_from_determinant(n, alpha), "rh-model");
  rec.set_output("cos_half_alpha", std::cos(alpha / 2), "rh-model");
  return rec;
}

ReportRecord run_painleve(const Options& opt, int n, double alpha) {
  ReportRecord rec;
  rec.command = "painleve";
  rec.inputs["n"] = n;
  rec.inputs["alpha"] = alpha;
  rec.inputs["fd_step"] = opt.fd_step;
  const auto eta = eta_from_determinant(n, alpha, opt.fd_step);
  rec.set_output("eta_re", eta.eta.real(), "painleve");
  rec.set_output("eta_im", eta.eta.imag(), "painleve");
  rec.set_output("fd_tolerance", eta.fd_tolerance, "painleve");
  rec.set_output("sigma_residual", sigma_pvi_residual(n, alpha, opt.fd_step), "painleve");
  const auto exp2 = eta_expansion(n, alpha);
  rec.set_output("eta_expansion_re", exp2.real(), "painleve");
  rec.set_output("eta_expansion_im", exp2.imag(), "painleve");
  return rec;
}

ReportRecord run_widom_fit(const Options& opt) {
  ReportRecord rec;
  rec.command = "widom-fit";
  const double alpha = resolve_alpha(Options(opt), 1.2);
  std::vector<std::pair<int, double>> pairs;
  for (int n : {opt.n, 2 * opt.n, 4 * opt.n}) pairs.emplace_back(n, alpha);
  rec.inputs["n"] = opt.n;
  rec.inputs["alpha"] = alpha;
  const auto fit = extract_c0_widom(pairs);
  rec.set_output("c0_estimate", fit.estimate, "toeplitz");
  rec.set_output("c0_reference", widom_dyson_c0(), "constants");
  for (size_t i = 0; i < fit.samples.size(); ++i) {
    rec.set_output("residual_" + std::to_string(i), fit.samples[i].second, "toeplitz");
    rec.set_output("rho_" + std::to_string(i), fit.samples[i].first, "toeplitz");
  }
  return rec;
}

ReportRecord run_dyson_fit(const Options& opt) {
  ReportRecord rec;
  rec.command = "dyson-fit";
  std::vector<double> svals{opt.s, 1.5 * opt.s, 2.0 * opt.s};
  rec.inputs["s"] = opt.s;
  const auto fit = extract_c0_dyson(svals, NystromConfig{opt.quad_order});
  rec.set_output("c0_estimate", fit.estimate, "fredholm");
  rec.set_output("c0_reference", widom_dyson_c0(), "constants");
  for (size_t i = 0; i < fit.samples.size(); ++i) {
    rec.set_output("residual_" + std::to_string(i), fit.samples[i].second, "fredholm");
    rec.set_output("s_" + std::to_string(i), fit.samples[i].first, "fredholm");
  }
  return rec;
}

ReportRecord run_dinteg(const Options& opt, double alpha0, int grid) {
  ReportRecord rec;
  rec.command = "dinteg";
  const double alpha = resolve_alpha(opt, 1.0);
  rec.inputs["n"] = opt.n;
  rec.inputs["alpha"] = alpha;
  rec.inputs["alpha0"] = alpha0;
  rec.inputs["grid"] = grid;
  rec.set_output("residual", dinteg_residual(opt.n, alpha, alpha0, grid), "rh-model");
  return rec;
}

// Grid spec "lo:hi:x2" (geometric) or "lo:hi:+0.4" (arithmetic).
std::vector<double> parse_progression(const std::string& spec) {
  const auto c1 = spec.find(':');
  const auto c2 = spec.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw CLI::ValidationError("grid spec must be lo:hi:x<f> or lo:hi:+<d>");
  const double lo = std::stod(spec.substr(0, c1));
  const double hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
  const std::string step = spec.substr(c2 + 1);
  if (step.empty() || (step[0] != 'x' && step[0] != '+'))
    throw CLI::ValidationError("grid step must start with 'x' or '+'");
  const double v = std::stod(step.substr(1));
  std::vector<double> out;
  if (step[0] == 'x') {
    if (!(v > 1.0)) throw CLI::ValidationError("geometric step must exceed 1");
    for (double x = lo; x <= hi * (1 + 1e-12); x *= v) out.push_back(x);
  } else {
    if (!(v > 0.0)) throw CLI::ValidationError("arithmetic step must be positive");
    for (double x = lo; x <= hi * (1 + 1e-12); x += v) out.push_back(x);
  }
  return out;
}

std::vector<ReportRecord> run_sweep(const Options& opt) {
  if (opt.n_spec.empty() || opt.alpha_spec.empty())
    throw CLI::ValidationError("sweep needs --n lo:hi:x2 and --alpha lo:hi:+0.4 grid specs");
  const auto ns = parse_progression(opt.n_spec);
  const auto alphas = parse_progression(opt.alpha_spec);
  std::vector<std::pair<int, double>> points;
  for (double nv : ns)
    for (double av : alphas) points.emplace_back(static_cast<int>(nv + 0.5), av);

  std::vector<ReportRecord> records(points.size());
  const int jobs = std::max(1, opt.jobs);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < points.size(); i = next.fetch_add(1))
      records[i] = run_toeplitz(opt, points[i].first, points[i].second);
  };
  std::vector<std::future<void>> pool;
  for (int t = 1; t < jobs; ++t) pool.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& f : pool) f.get();
  for (auto& r : records) r.command = "sweep";
  return records;
}

int run_selftest() {
  int failures = 0;
  auto check = [&](bool ok, const char* what) {
    std::printf("%s %s\n", ok ? "ok  " : "FAIL", what);
    if (!ok) ++failures;
  };
  const double c0 = widom_dyson_c0();
  check(std::abs(zeta_prime_minus1().value + 0.16542114370045) < 1e-10, "zeta'(-1)");
  check(c0 > -0.4386 && c0 < -0.4384, "c0 window");
  const auto rule = gauss_legendre<double>(12);
  check(std::abs(rule.weights.sum() - 2.0) < 1e-13, "quadrature weight sum");
  const auto d2 = log_det(ArcEnsemble(2, M_PI / 2), PrecisionConfig::native());
  check(std::abs(d2.log_det - std::log(0.25 - 1.0 / (M_PI * M_PI))) < 1e-12, "closed-form D_2");
  check(std::abs(multiple_integral_oracle(2, M_PI / 2, 80) - std::exp(d2.log_det)) < 1e-9,
        "multiple-integral oracle");
  check(a_n(3).str() == "32/135", "A_3 exact");
  check(std::abs(log_det_gap(GapSpec(0.1)) - std::log(1 - 0.2 / M_PI)) < 1e-3, "trace regime");
  const Mat2C N = model_solution(Complex(0.3, 0.8));
  check(std::abs(N.determinant() - 1.0) < 1e-12, "det N = 1");
  const Complex x(0.4, 0.0);
  check(std::abs(f_eval(x, 1.1, BoundarySide::plus) * f_eval(x, 1.1, BoundarySide::minus) - 1.0) <
            1e-12,
        "f+ f- = 1");
  check(std::abs(sigma_pvi_residual(4, 2.0, 1e-3)) < 1e-4, "sigma-form residual");
  check(std::abs(extract_c0_dyson({3.0, 4.5, 6.0}).estimate - c0) < 5e-3, "dyson extraction");
  std::printf("%s\n", failures == 0 ? "selftest passed" : "selftest FAILED");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gap probabilities of random matrix theory: Toeplitz, Fredholm, "
               "Riemann-Hilbert and Painleve VI routes"};
  app.require_subcommand(1);

  Options opt;
  double alpha0 = 2.8;
  int grid = 32;

  auto add_common = [&](CLI::App* cmd, bool with_n = true) {
    if (with_n) cmd->add_option("--n", opt.n, "matrix dimension");
    cmd->add_option("--alpha", opt.alpha, "arc half-gap in radians, (0, pi]");
    cmd->add_option("--beta", opt.beta, "pi - alpha (alternative near alpha = pi)");
    cmd->add_option("--digits", opt.digits, "working decimal digits (0 = auto)");
    cmd->add_option("--quad-order", opt.quad_order, "quadrature order override");
    cmd->add_option("--fd-step", opt.fd_step, "finite-difference step");
    cmd->add_option("--format", opt.format, "jsonl (default) or csv");
  };

  auto* c_const = app.add_subcommand("constants", "zeta'(-1) and the Widom-Dyson constant");
  c_const->add_option("--format", opt.format, "jsonl or csv");

  auto* c_toep = app.add_subcommand("toeplitz", "log-determinant of the arc Toeplitz matrix");
  add_common(c_toep);
  c_toep->add_flag("--log", "kept for symmetry; output is always the log");

  auto* c_fred = app.add_subcommand("fredholm", "sine-kernel Fredholm determinant");
  c_fred->add_option("--s", opt.s, "half-length of the excluded interval");
  c_fred->add_option("--gamma", opt.gamma, "deformation parameter in (0,1]");
  c_fred->add_option("--quad-order", opt.quad_order, "Nystrom order (0 = default)");
  c_fred->add_option("--format", opt.format, "jsonl or csv");

  auto* c_delta = app.add_subcommand("delta", "Delta via determinant and via asymptotics");
  add_common(c_delta);

  auto* c_theta = app.add_subcommand("theta", "Theta = ratio / cos^{2n}(alpha/2)");
  add_common(c_theta);

  auto* c_pain = app.add_subcommand("painleve", "tau-function data and sigma-form residual");
  add_common(c_pain);

  auto* c_wfit = app.add_subcommand("widom-fit", "extract c0 from D_n residuals (n, 2n, 4n)");
  add_common(c_wfit);

  auto* c_dfit = app.add_subcommand("dyson-fit", "extract c0 from P_s residuals (s, 1.5s, 2s)");
  c_dfit->add_option("--s", opt.s, "base interval parameter");
  c_dfit->add_option("--quad-order", opt.quad_order, "Nystrom order (0 = default)");
  c_dfit->add_option("--format", opt.format, "jsonl or csv");

  auto* c_dint = app.add_subcommand("dinteg", "integrated differential identity residual");
  add_common(c_dint);
  c_dint->add_option("--alpha0", alpha0, "upper integration endpoint");
  c_dint->add_option("--grid", grid, "Gauss-Legendre order per layer");

  auto* c_sweep = app.add_subcommand("sweep", "grid sweep of toeplitz over n and alpha");
  c_sweep->add_option("--n", opt.n_spec, "grid spec lo:hi:x2 or lo:hi:+10")->required();
  c_sweep->add_option("--alpha", opt.alpha_spec, "grid spec lo:hi:+0.4")->required();
  c_sweep->add_option("--digits", opt.digits, "working decimal digits (0 = auto)");
  c_sweep->add_option("--jobs", opt.jobs, "worker pool width");
  c_sweep->add_option("--format", opt.format, "jsonl or csv");

  auto* c_self = app.add_subcommand("selftest", "run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::vector<ReportRecord> records;
    if (c_const->parsed()) {
      records.push_back(run_constants());
    } else if (c_toep->parsed()) {
      records.push_back(run_toeplitz(opt, opt.n, resolve_alpha(opt)));
    } else if (c_fred->parsed()) {
      records.push_back(run_fredholm(opt));
    } else if (c_delta->parsed()) {
      records.push_back(run_delta(opt, opt.n, resolve_alpha(opt)));
    } else if (c_theta->parsed()) {
      records.push_back(run_theta(opt, opt.n, resolve_alpha(opt)));
    } else if (c_pain->parsed()) {
      records.push_back(run_painleve(opt, opt.n, resolve_alpha(opt, 1.8)));
    } else if (c_wfit->parsed()) {
      records.push_back(run_widom_fit(opt));
    } else if (c_dfit->parsed()) {
      records.push_back(run_dyson_fit(opt));
    } else if (c_dint->parsed()) {
      records.push_back(run_dinteg(opt, alpha0, grid));
    } else if (c_sweep->parsed()) {
      records = run_sweep(opt);
    } else if (c_self->parsed()) {
      return run_selftest();
    }
    emit(records, opt.format);
    return 0;
  } catch (const NumericalFault& e) {
    std::cerr << "numerical fault: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
