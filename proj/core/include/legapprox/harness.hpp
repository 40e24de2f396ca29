#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "legapprox/bounds.hpp"
#include "legapprox/function.hpp"

namespace legapprox {

enum class FigureTag { Fig1 = 1, Fig2, Fig3, Fig4, Fig5 };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  [[nodiscard]] bool contains(double v) const { return v >= lo && v <= hi; }
};

struct FunctionCatalogEntry {
  std::string id;  // short command-line name
  FunctionSpec spec;
  FigureTag figure = FigureTag::Fig1;
  std::optional<double> expected_rate;  // slope of log err_P vs log n
  std::optional<Interval> ratio_window_P;
  std::optional<Interval> ratio_window_T;
  /// m such that f^(m) has bounded variation, and f^(m) itself.
  std::optional<int> bv_order;
  std::function<double(double)> bv_derivative;
};

/// The test functions of the five figures, in figure order.
const std::vector<FunctionCatalogEntry>& catalog();

/// Entry whose id or label equals `name`; nullptr if there is none.
const FunctionCatalogEntry* find_entry(std::string_view name);

/// Catalog entry spec by id or label, otherwise the parsed expression.
FunctionSpec resolve_function(std::string_view name_or_expr);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS deviation of log(error) from the line
  int points = 0;

  bool operator==(const RateFit&) const = default;
};

/// Least-squares slope of log(error) against log(n) over degrees in
/// `window`. Needs at least five points there, all with positive errors.
RateFit rate_fit(std::span<const int> degrees, std::span<const double> errors,
                 Interval window);

struct RateReport {
  std::string function_label;
  std::vector<int> degrees;
  std::vector<double> err_P;
  std::vector<double> err_T;
  std::vector<double> err_B;
  std::vector<double> ratio_P;  // err_B / err_P
  std::vector<double> ratio_T;  // err_B / err_T
  std::vector<double> scaled_ratio_P;  // sqrt(n) * ratio_P
  RateFit slope_P;
  RateFit slope_T;
  RateFit slope_B;
  /// Degrees where Remez failed; their err_B and ratios are NaN.
  std::vector<int> remez_failures;
  /// Per degree: 1 if the best approximation carries a valid
  /// equioscillation certificate.
  std::vector<int> equioscillation;
  bool log_log = true;  // preferred plot axes

  bool operator==(const RateReport&) const = default;
};

struct SweepOptions {
  int stride = 1;
  std::optional<Interval> slope_window;  // default: upper half of the sweep
  int threads = 0;                       // 0: hardware concurrency
};

/// Errors of the Legendre and Chebyshev projections and of the best
/// approximation for n = n_min, n_min + stride, ..., <= n_max, all measured
/// on the shared assessment grid of f.
RateReport sweep(const FunctionSpec& f, int n_min, int n_max,
                 const SweepOptions& options = {});
RateReport sweep(const FunctionCatalogEntry& entry, int n_min, int n_max,
                 const SweepOptions& options = {});

struct PointwiseTable {
  std::string function_label;
  int n = 0;
  std::vector<double> x;
  std::vector<double> err_P;  // |f - P_n f|
  std::vector<double> err_B;  // |f - B_n f|
  double max_P = 0.0;
  double argmax_P = 0.0;
  double levelled_B = 0.0;

  bool operator==(const PointwiseTable&) const = default;
};

PointwiseTable pointwise_figure(const FunctionSpec& f, int n);
PointwiseTable pointwise_figure(std::string_view name, int n);

/// Every bound that applies to f at degree n, each compared with the
/// corresponding measured error:
///  - with a complex evaluator and rho > 1: the Chebyshev projection bound,
///    the Legendre projection bound and the bound on |a_{n+1}|;
///  - for catalog functions of bounded-variation order m < n: the Chebyshev
///    bound in terms of the variation of f^(m);
///  - always: (1 + Lambda_n) times the best approximation error.
/// Throws DomainError if M is not finite on the ellipse (a singularity
/// inside it).
std::vector<BoundReport> assess_bounds(const FunctionSpec& f, int n,
                                       std::optional<double> rho);

/// Writes the data files (csv, json, svg) of figure `id` into `dir` and
/// returns their paths.
std::vector<std::filesystem::path> figure(int id,
                                          const std::filesystem::path& dir);

}  // namespace legapprox
