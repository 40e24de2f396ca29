// legapprox: command-line front end to the approximation library.
//
// Exit codes: 0 success, 1 usage error, 2 numerical non-convergence,
// 3 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "legapprox/bestapprox.hpp"
#include "legapprox/bounds.hpp"
#include "legapprox/emit.hpp"
#include "legapprox/error.hpp"
#include "legapprox/harness.hpp"
#include "legapprox/peano.hpp"
#include "legapprox/projections.hpp"

namespace {

using namespace legapprox;

enum Exit { kOk = 0, kUsage = 1, kNoConvergence = 2, kIo = 3 };

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << body;
  if (!out) throw IoError("write to '" + path + "' failed");
}

int run_coeffs(const std::string& function, const std::string& basis,
               int degree, const std::string& out) {
  const FunctionSpec f = resolve_function(function);
  const SeriesCoeffs s = basis == "legendre" ? legendre_coeffs(f, degree)
                                             : chebyshev_coeffs(f, degree);
  std::string body = "k,coeff\n";
  for (int k = 0; k <= s.degree(); ++k) {
    body += std::to_string(k) + ',' + g17(s.coeffs[k]) + '\n';
  }
  write_text(out, body);
  if (!s.converged) {
    std::cerr << "warning: coefficients did not stabilise\n";
  }
  return kOk;
}

int run_project(const std::string& function, int degree, int points) {
  const FunctionSpec f = resolve_function(function);
  const auto grid = assessment_grid(f.breakpoints, points);
  const ErrorPeak p = max_error_on(f, legendre_coeffs(f, degree), grid);
  const ErrorPeak t = max_error_on(f, chebyshev_coeffs(f, degree), grid);
  std::cout << "function " << f.label << "\ndegree " << degree
            << "\ngrid_points " << grid.size() << "\nerr_P " << g17(p.value)
            << "\nargmax_P " << g17(p.argmax) << "\nerr_T " << g17(t.value)
            << "\nargmax_T " << g17(t.argmax) << '\n';
  return kOk;
}

int run_remez(const std::string& function, int degree) {
  const FunctionSpec f = resolve_function(function);
  const RemezResult r = remez_best(f, degree);
  const auto cert = equioscillation_check(f, r);
  std::cout << "function " << f.label << "\ndegree " << degree
            << "\nlevelled_error " << g17(r.levelled_error) << "\nmax_error "
            << g17(r.max_error) << "\niterations " << r.iterations
            << "\nequioscillation " << (cert.pass ? "pass" : "fail")
            << "\nreference";
  for (double x : r.reference) std::cout << ' ' << g17(x);
  std::cout << "\nchebyshev_coeffs";
  for (double c : r.poly.coeffs) std::cout << ' ' << g17(c);
  std::cout << '\n';
  return kOk;
}

int run_bounds(const std::string& function, int degree, double rho) {
  const FunctionSpec f = resolve_function(function);
  const auto reports = assess_bounds(f, degree, rho);
  bool all = true;
  std::cout << "bound,value,measured,margin,verdict\n";
  for (const auto& r : reports) {
    const bool ok = r.satisfied();
    all = all && ok;
    std::cout << r.name << ',' << g17(r.value) << ','
              << g17(r.measured.value_or(0.0)) << ','
              << g17(r.margin.value_or(0.0)) << ','
              << (ok ? "satisfied" : "violated") << '\n';
  }
  if (!f.has_complex()) {
    std::cerr << "note: no complex evaluator; analytic bounds skipped\n";
  }
  if (!all) std::cerr << "note: some bounds are violated\n";
  return kOk;
}

int run_sweep(const std::string& function, int nmin, int nmax, int stride,
              const std::string& format, const std::string& out) {
  const FunctionSpec f = resolve_function(function);
  const EmitFormat fmt = parse_format(format);
  SweepOptions opts;
  opts.stride = stride;
  const RateReport r = sweep(f, nmin, nmax, opts);
  emit(r, fmt, out);
  std::cout << "wrote " << out << " (" << r.degrees.size() << " degrees";
  if (!r.remez_failures.empty()) {
    std::cout << ", Remez failed at " << r.remez_failures.size();
  }
  std::cout << ")\n";
  return r.remez_failures.empty() ? kOk : kNoConvergence;
}

int run_figure(int id, const std::string& dir) {
  for (const auto& p : figure(id, dir)) std::cout << p.string() << '\n';
  return kOk;
}

int run_peano(int m, int degree) {
  const PeanoReport r = peano_properties_report(m, degree);
  std::cout << "m " << r.m << "\nn " << r.n << "\nboundary_residual "
            << g17(r.boundary_residual) << "\northogonality_residual "
            << g17(r.orthogonality_residual) << "\nderivative_residual "
            << g17(r.derivative_residual) << "\ndecay_slope "
            << g17(r.decay_slope) << "\nclaimed_slope " << r.claimed_slope
            << "\nsweep n,sup_K\n";
  for (std::size_t i = 0; i < r.sweep_degrees.size(); ++i) {
    std::cout << r.sweep_degrees[i] << ',' << g17(r.sweep_sup[i]) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendre, Chebyshev and best polynomial approximation"};
  app.require_subcommand(1);

  std::string function;
  std::string basis = "legendre";
  std::string out;
  std::string format = "csv";
  int degree = 0;
  int points = kAssessmentBasePoints;
  int nmin = 1;
  int nmax = 30;
  int stride = 1;
  int id = 1;
  int m = 2;
  double rho = 0.0;

  const auto function_opt = [&](CLI::App* sub) {
    sub->add_option("--function", function,
                    "catalog id, catalog label or expression in x")
        ->required();
  };
  const auto degree_opt = [&](CLI::App* sub) {
    sub->add_option("--degree", degree, "polynomial degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
  };

  auto* coeffs = app.add_subcommand("coeffs", "expansion coefficients");
  function_opt(coeffs);
  coeffs->add_option("--basis", basis)
      ->check(CLI::IsMember({"legendre", "chebyshev"}));
  degree_opt(coeffs);
  coeffs->add_option("--out", out, "CSV file (default: stdout)");

  auto* project = app.add_subcommand("project", "projection max error");
  function_opt(project);
  degree_opt(project);
  project->add_option("--grid", points, "base grid points")
      ->check(CLI::Range(3, 1 << 20));

  auto* remez = app.add_subcommand("remez", "best approximation");
  function_opt(remez);
  degree_opt(remez);

  auto* bounds = app.add_subcommand("bounds", "error bounds and verdicts");
  function_opt(bounds);
  degree_opt(bounds);
  bounds->add_option("--rho", rho, "Bernstein ellipse parameter")
      ->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "degree sweep");
  function_opt(sweep_cmd);
  sweep_cmd->add_option("--nmin", nmin)->required();
  sweep_cmd->add_option("--nmax", nmax)->required();
  sweep_cmd->add_option("--stride", stride)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  sweep_cmd->add_option("--out", out)->required();

  auto* figure_cmd = app.add_subcommand("figure", "figure data files");
  figure_cmd->add_option("--id", id)->required()->check(CLI::Range(1, 5));
  figure_cmd->add_option("--out", out, "output directory")->required();

  auto* peano = app.add_subcommand("peano", "Peano kernel properties");
  peano->add_option("--m", m)->required()->check(CLI::Range(2, 4));
  degree_opt(peano);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*coeffs) return run_coeffs(function, basis, degree, out);
    if (*project) return run_project(function, degree, points);
    if (*remez) return run_remez(function, degree);
    if (*bounds) return run_bounds(function, degree, rho);
    if (*sweep_cmd) return run_sweep(function, nmin, nmax, stride, format, out);
    if (*figure_cmd) return run_figure(id, out);
    if (*peano) return run_peano(m, degree);
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::logic_error& e) {  // DomainError, ParseError
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
