#pragma once

#include <span>
#include <vector>

#include "legapprox/error.hpp"
#include "legapprox/function.hpp"
#include "legapprox/projections.hpp"

namespace legapprox {

struct RemezOptions {
  int max_iterations = 100;
  /// Stop when (max_error - levelled_error) / max_error falls below this.
  double tolerance = 1e-10;
  /// Polish each grid extremum by a local 1-D maximisation of |f - p|.
  bool refine_extrema = true;
};

struct RemezResult {
  SeriesCoeffs poly{BasisKind::chebyshev(), {}, true};
  double levelled_error = 0.0;
  std::vector<double> reference;  // n+2 increasing points
  int iterations = 0;
  double residual_flatness = 0.0;  // max_error - levelled_error
  double max_error = 0.0;
  /// Arithmetic noise level of f - p; differences below it are not
  /// meaningful.
  double noise_floor = 0.0;
  bool converged = false;
};

class RemezConvergenceError : public ConvergenceError {
 public:
  RemezConvergenceError(const std::string& what, RemezResult last)
      : ConvergenceError(what), last_(std::move(last)) {}
  [[nodiscard]] const RemezResult& last_iterate() const { return last_; }

 private:
  RemezResult last_;
};

/// Minimax polynomial of degree n on the assessment grid of f, computed by
/// multi-point Remez exchange from a Chebyshev-Lobatto initial reference.
/// Throws RemezConvergenceError if the stopping rule is not met within
/// max_iterations.
RemezResult remez_best(const FunctionSpec& f, int n,
                       const RemezOptions& options = {});

/// Same on a caller-supplied ascending grid.
RemezResult remez_best_on(const FunctionSpec& f, int n,
                          std::span<const double> grid,
                          const RemezOptions& options = {});

struct EquioscillationReport {
  int alternation_count = 0;
  std::vector<int> signs;
  double min_reference_error = 0.0;
  double max_reference_error = 0.0;
  double level_spread = 0.0;  // (max - min) / max
  bool pass = false;
};

/// Passes iff the signs of f - p alternate across all n+2 reference points
/// and the reference error levels agree to a relative spread of 1e-6 (or to
/// the arithmetic noise floor when the error itself is that small).
EquioscillationReport equioscillation_check(const FunctionSpec& f,
                                            const RemezResult& r);

}  // namespace legapprox
