#include "legapprox/harness.hpp"

#include <cmath>
#include <limits>
#include <variant>

#include "legapprox/bestapprox.hpp"
#include "legapprox/emit.hpp"
#include "legapprox/error.hpp"
#include "legapprox/projections.hpp"
#include "parallel.hpp"

namespace legapprox {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kMaxSweepDegree = 200;

// Fit over the finite points only; an all-NaN or short series gives a NaN
// slope rather than aborting the sweep.
RateFit fit_or_nan(const std::vector<int>& degrees,
                   const std::vector<double>& errors, Interval window) {
  std::vector<int> d;
  std::vector<double> e;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (std::isfinite(errors[i]) && errors[i] > 0.0) {
      d.push_back(degrees[i]);
      e.push_back(errors[i]);
    }
  }
  try {
    return rate_fit(d, e, window);
  } catch (const DomainError&) {
    return {kNaN, kNaN, kNaN, 0};
  }
}

}  // namespace

RateFit rate_fit(std::span<const int> degrees, std::span<const double> errors,
                 Interval window) {
  if (degrees.size() != errors.size()) {
    throw DomainError("rate_fit: degrees and errors differ in length");
  }
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (!window.contains(degrees[i])) continue;
    if (degrees[i] <= 0) throw DomainError("rate_fit: degrees must be positive");
    if (!(errors[i] > 0.0)) throw DomainError("rate_fit: errors must be positive");
    lx.push_back(std::log(double(degrees[i])));
    ly.push_back(std::log(errors[i]));
  }
  const std::size_t m = lx.size();
  if (m < 5) throw DomainError("rate_fit: need at least 5 points in window");
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / m);
  fit.points = static_cast<int>(m);
  return fit;
}

RateReport sweep(const FunctionSpec& f, int n_min, int n_max,
                 const SweepOptions& options) {
  if (n_min < 0 || n_min >= n_max || n_max > kMaxSweepDegree) {
    throw DomainError("sweep: need 0 <= n_min < n_max <= 200");
  }
  if (options.stride < 1) throw DomainError("sweep: stride must be >= 1");

  RateReport r;
  r.function_label = f.label;
  r.log_log = !std::holds_alternative<smoothness::Analytic>(f.smoothness);
  for (int n = n_min; n <= n_max; n += options.stride) r.degrees.push_back(n);
  const std::size_t count = r.degrees.size();
  r.err_P.assign(count, kNaN);
  r.err_T.assign(count, kNaN);
  r.err_B.assign(count, kNaN);
  r.equioscillation.assign(count, 0);

  // Coefficients do not depend on the truncation degree.
  const auto grid = assessment_grid(f);
  const SeriesCoeffs a = legendre_coeffs(f, n_max);
  const SeriesCoeffs c = chebyshev_coeffs(f, n_max);
  std::vector<char> failed(count, 0);

  detail::parallel_for(count, options.threads, [&](std::size_t i) {
    const int n = r.degrees[i];
    r.err_P[i] = max_error_on(f, truncate(a, n), grid).value;
    r.err_T[i] = max_error_on(f, truncate(c, n), grid).value;
    try {
      const RemezResult b = remez_best_on(f, n, grid);
      r.err_B[i] = b.max_error;
      r.equioscillation[i] = equioscillation_check(f, b).pass ? 1 : 0;
    } catch (const RemezConvergenceError&) {
      failed[i] = 1;
    }
  });

  for (std::size_t i = 0; i < count; ++i) {
    if (failed[i]) r.remez_failures.push_back(r.degrees[i]);
    r.ratio_P.push_back(r.err_B[i] / r.err_P[i]);
    r.ratio_T.push_back(r.err_B[i] / r.err_T[i]);
    r.scaled_ratio_P.push_back(std::sqrt(double(r.degrees[i])) * r.ratio_P[i]);
  }

  const Interval window = options.slope_window.value_or(
      Interval{n_min + 0.5 * (n_max - n_min), double(n_max)});
  r.slope_P = fit_or_nan(r.degrees, r.err_P, window);
  r.slope_T = fit_or_nan(r.degrees, r.err_T, window);
  r.slope_B = fit_or_nan(r.degrees, r.err_B, window);
  return r;
}

RateReport sweep(const FunctionCatalogEntry& entry, int n_min, int n_max,
                 const SweepOptions& options) {
  return sweep(entry.spec, n_min, n_max, options);
}

PointwiseTable pointwise_figure(const FunctionSpec& f, int n) {
  if (n < 0 || n > kMaxSweepDegree) {
    throw DomainError("pointwise_figure: degree must lie in [0, 200]");
  }
  PointwiseTable t;
  t.function_label = f.label;
  t.n = n;
  t.x = assessment_grid(f);
  const SeriesCoeffs p = legendre_coeffs(f, n);
  const RemezResult b = remez_best_on(f, n, t.x);
  t.err_P = pointwise_error(f, p, t.x);
  t.err_B = pointwise_error(f, b.poly, t.x);
  t.levelled_B = b.levelled_error;
  for (std::size_t i = 0; i < t.x.size(); ++i) {
    if (t.err_P[i] > t.max_P) {
      t.max_P = t.err_P[i];
      t.argmax_P = t.x[i];
    }
  }
  return t;
}

PointwiseTable pointwise_figure(std::string_view name, int n) {
  const auto* e = find_entry(name);
  if (e == nullptr) {
    throw DomainError("pointwise_figure: '" + std::string(name) +
                      "' is not a catalog function");
  }
  return pointwise_figure(e->spec, n);
}

std::vector<std::filesystem::path> figure(int id,
                                          const std::filesystem::path& dir) {
  if (id < 1 || id > 5) throw DomainError("figure: id must lie in 1..5");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create directory '" + dir.string() +
                  "': " + ec.message());
  }
  std::vector<std::filesystem::path> written;
  const auto write_all = [&](const auto& report, const std::string& stem) {
    for (const auto& [fmt, ext] :
         {std::pair{EmitFormat::Csv, ".csv"}, std::pair{EmitFormat::Json, ".json"},
          std::pair{EmitFormat::Svg, ".svg"}}) {
      const auto path = dir / (stem + ext);
      emit(report, fmt, path);
      written.push_back(path);
    }
  };

  const auto tag = static_cast<FigureTag>(id);
  if (tag == FigureTag::Fig3) {
    const auto* e = find_entry("spline1");
    for (int n : {50, 100}) {
      write_all(pointwise_figure(e->spec, n),
                e->id + "_n" + std::to_string(n));
    }
    return written;
  }
  const int n_min = tag == FigureTag::Fig4 || tag == FigureTag::Fig5 ? 2 : 1;
  const int n_max = tag == FigureTag::Fig1 ? 30 : 100;
  for (const auto& e : catalog()) {
    if (e.figure != tag) continue;
    write_all(sweep(e, n_min, n_max), e.id);
  }
  return written;
}

}  // namespace legapprox

namespace legapprox {

std::vector<BoundReport> assess_bounds(const FunctionSpec& f, int n,
                                       std::optional<double> rho) {
  if (n < 0 || n > kMaxSweepDegree) {
    throw DomainError("assess_bounds: degree must lie in [0, 200]");
  }
  const auto grid = assessment_grid(f);
  const SeriesCoeffs a = legendre_coeffs(f, n + 1);
  const SeriesCoeffs c = chebyshev_coeffs(f, n);
  const double err_P = max_error_on(f, truncate(a, n), grid).value;
  const double err_T = max_error_on(f, c, grid).value;
  std::vector<BoundReport> out;
  const auto add = [&out](std::string name, double value,
                          std::map<std::string, double> params,
                          double measured) {
    BoundReport r;
    r.name = std::move(name);
    r.value = value;
    r.params = std::move(params);
    out.push_back(r.compare_with(measured));
  };

  if (rho && f.has_complex()) {
    if (const auto* an = std::get_if<smoothness::Analytic>(&f.smoothness);
        an && !(*rho < an->rho_est)) {
      throw DomainError("assess_bounds: f has a singularity inside the "
                        "ellipse (rho must be below " +
                        std::to_string(an->rho_est) + ")");
    }
    const auto e = BernsteinEllipse::from_rho(*rho);
    const double M = ellipse_max_modulus(f, e);
    if (!std::isfinite(M)) {
      throw DomainError("assess_bounds: f is not bounded on the ellipse");
    }
    const std::map<std::string, double> params{
        {"rho", *rho}, {"M", M}, {"n", double(n)}};
    add("chebyshev_analytic", cheb_analytic_bound(M, *rho, n), params, err_T);
    add("legendre_projection", leg_projection_bound(e, M, n), params, err_P);
    add("legendre_coeff_next", leg_coeff_bound(e, M, n + 1), params,
        std::abs(a.coeffs[n + 1]));
  }

  if (const auto* entry = find_entry(f.label);
      entry && entry->bv_order && *entry->bv_order < n) {
    const int m = *entry->bv_order;
    const double V = total_variation(entry->bv_derivative, f.breakpoints);
    add("chebyshev_bounded_variation", cheb_bv_bound(V, m, n),
        {{"V", V}, {"m", double(m)}, {"n", double(n)}}, err_T);
  }

  const RemezResult best = remez_best_on(f, n, grid);
  const double lambda = lebesgue_constant(n);
  add("projection_vs_best", projection_vs_best_bound(best.max_error, n),
      {{"lambda", lambda}, {"err_B", best.max_error}, {"n", double(n)}}, err_P);
  return out;
}

}  // namespace legapprox
