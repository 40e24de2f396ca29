#include "legapprox/bestapprox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>
#include <boost/math/tools/minima.hpp>

namespace legapprox {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxRemezDegree = 200;

struct Extremum {
  double x;
  double err;
};

double noise_floor_of(double fmax, const std::vector<double>& c) {
  double s = fmax;
  for (double v : c) s += std::abs(v);
  return 64.0 * kEps * s;
}

// Solves sum_j c_j T_j(x_i) + (-1)^i E = f(x_i) on the reference.
std::pair<std::vector<double>, double> levelled_solve(
    const std::vector<double>& ref, const std::vector<double>& fref, int n) {
  const int m = n + 2;
  Eigen::MatrixXd a(m, m);
  Eigen::VectorXd rhs(m);
  for (int i = 0; i < m; ++i) {
    const double x = ref[i];
    double prev = 1.0;
    double cur = x;
    a(i, 0) = 1.0;
    for (int j = 1; j <= n; ++j) {
      a(i, j) = cur;
      const double next = 2.0 * x * cur - prev;
      prev = cur;
      cur = next;
    }
    a(i, n + 1) = (i % 2 == 0) ? 1.0 : -1.0;
    rhs(i) = fref[i];
  }
  const Eigen::VectorXd sol = a.partialPivLu().solve(rhs);
  std::vector<double> c(sol.data(), sol.data() + n + 1);
  return {std::move(c), sol(n + 1)};
}

// Local maximiser of |f - p| near a grid extremum; keeps the grid point if
// the search does not improve on it (kinks sit exactly on grid points).
Extremum refine(const FunctionSpec& f, const SeriesCoeffs& p, double lo,
                double hi, Extremum best) {
  if (!(hi > lo)) return best;
  const auto neg_abs_err = [&](double x) {
    return -std::abs(f(x) - eval_series(p, x));
  };
  const int bits = std::numeric_limits<double>::digits / 2;
  std::uintmax_t max_iter = 200;
  const auto [x, v] =
      boost::math::tools::brent_find_minima(neg_abs_err, lo, hi, bits, max_iter);
  // The bracket may reach into a neighbouring run of opposite sign.
  const double e = f(x) - eval_series(p, x);
  if (-v > std::abs(best.err) && (e > 0.0) == (best.err > 0.0)) return {x, e};
  return best;
}

}  // namespace

RemezResult remez_best(const FunctionSpec& f, int n,
                       const RemezOptions& options) {
  const auto grid = assessment_grid(f);
  return remez_best_on(f, n, grid, options);
}

RemezResult remez_best_on(const FunctionSpec& f, int n,
                          std::span<const double> grid,
                          const RemezOptions& options) {
  if (n < 0 || n > kMaxRemezDegree) {
    throw DomainError("remez_best: degree must lie in [0, 200]");
  }
  if (grid.size() < static_cast<std::size_t>(n) + 2) {
    throw DomainError("remez_best: grid has fewer than n+2 points");
  }
  const std::size_t gsize = grid.size();
  std::vector<double> fgrid(gsize);
  double fmax = 0.0;
  for (std::size_t i = 0; i < gsize; ++i) {
    fgrid[i] = f(grid[i]);
    fmax = std::max(fmax, std::abs(fgrid[i]));
  }

  // Initial reference: extremal points of T_{n+1} snapped to the grid. For
  // even or odd f this reference can be symmetric in a way that forces a
  // zero levelled error; the fallback drops one extremal point of T_{n+2},
  // which breaks the symmetry.
  std::vector<double> ref(static_cast<std::size_t>(n) + 2);
  const auto snap_reference = [&](int intervals) {
    std::size_t last = 0;
    for (int i = 0; i <= n + 1; ++i) {
      const double target = -std::cos(std::numbers::pi * i / intervals);
      auto it = std::lower_bound(grid.begin(), grid.end(), target);
      std::size_t idx = static_cast<std::size_t>(it - grid.begin());
      if (idx == gsize ||
          (idx > 0 && target - grid[idx - 1] < grid[idx] - target)) {
        --idx;
      }
      if (i > 0 && idx <= last) idx = last + 1;
      ref[i] = grid[std::min(idx, gsize - 1)];
      last = idx;
    }
  };
  snap_reference(n + 1);
  bool symmetric_start = true;

  RemezResult result;
  result.poly.basis = BasisKind::chebyshev();
  std::vector<double> fref(ref.size());
  std::vector<double> cx;  // candidates: grid plus current reference
  std::vector<double> cerr;

  for (int it = 1; it <= options.max_iterations; ++it) {
    for (std::size_t i = 0; i < ref.size(); ++i) fref[i] = f(ref[i]);
    auto [c, level] = levelled_solve(ref, fref, n);
    result.poly.coeffs = std::move(c);
    result.levelled_error = std::abs(level);
    result.reference = ref;
    result.iterations = it;
    result.noise_floor = noise_floor_of(fmax, result.poly.coeffs);

    // Off-grid reference points carry |err| = E with alternating signs;
    // keeping them among the candidates guarantees n+2 sign runs at or
    // above the level, which is what makes the level increase.
    cx.clear();
    cerr.clear();
    {
      std::size_t j = 0;
      for (std::size_t i = 0; i < gsize; ++i) {
        while (j < ref.size() && ref[j] < grid[i]) {
          cx.push_back(ref[j]);
          cerr.push_back(fref[j] - eval_series(result.poly, ref[j]));
          ++j;
        }
        if (j < ref.size() && ref[j] == grid[i]) ++j;
        cx.push_back(grid[i]);
        cerr.push_back(fgrid[i] - eval_series(result.poly, grid[i]));
      }
      for (; j < ref.size(); ++j) {
        cx.push_back(ref[j]);
        cerr.push_back(fref[j] - eval_series(result.poly, ref[j]));
      }
    }
    const std::size_t csize = cx.size();

    // One extremum per maximal run of constant sign.
    std::vector<Extremum> ext;
    std::vector<std::size_t> ext_idx;
    for (std::size_t i = 0; i < csize; ++i) {
      if (cerr[i] == 0.0) continue;
      const bool pos = cerr[i] > 0.0;
      if (ext.empty() || (ext.back().err > 0.0) != pos) {
        ext.push_back({cx[i], cerr[i]});
        ext_idx.push_back(i);
      } else if (std::abs(cerr[i]) > std::abs(ext.back().err)) {
        ext.back() = {cx[i], cerr[i]};
        ext_idx.back() = i;
      }
    }
    if (options.refine_extrema) {
      for (std::size_t k = 0; k < ext.size(); ++k) {
        const std::size_t i = ext_idx[k];
        const double lo = cx[i > 0 ? i - 1 : 0];
        const double hi = cx[i + 1 < csize ? i + 1 : i];
        ext[k] = refine(f, result.poly, lo, hi, ext[k]);
      }
    }

    // Extrema below the current level cannot belong to a better reference;
    // dropping them and merging equal-sign neighbours keeps alternation.
    {
      // Reference points sit at the level only up to roundoff.
      const double floor_level =
          result.levelled_error -
          std::max(1e-9 * result.levelled_error, result.noise_floor);
      std::vector<Extremum> kept;
      for (const Extremum& e : ext) {
        if (std::abs(e.err) < floor_level) continue;
        if (!kept.empty() && (kept.back().err > 0.0) == (e.err > 0.0)) {
          if (std::abs(e.err) > std::abs(kept.back().err)) kept.back() = e;
        } else {
          kept.push_back(e);
        }
      }
      if (kept.size() >= ref.size()) ext = std::move(kept);
    }

    double max_err = 0.0;
    std::size_t arg = 0;
    for (std::size_t k = 0; k < ext.size(); ++k) {
      if (std::abs(ext[k].err) > max_err) {
        max_err = std::abs(ext[k].err);
        arg = k;
      }
    }
    result.max_error = std::max(max_err, result.levelled_error);
    result.residual_flatness = result.max_error - result.levelled_error;

    if (symmetric_start && it == 1 &&
        result.levelled_error <= result.noise_floor &&
        result.max_error > result.noise_floor) {
      symmetric_start = false;
      snap_reference(n + 2);
      continue;
    }
    if (result.max_error <= result.noise_floor) {
      result.converged = true;  // f is reproduced to working precision
      return result;
    }
    if (result.residual_flatness <=
        options.tolerance * result.max_error + result.noise_floor) {
      result.converged = true;
      return result;
    }
    if (ext.size() < ref.size()) {
      throw RemezConvergenceError(
          "remez_best: error alternates on fewer than n+2 points", result);
    }
    // n+2 consecutive alternating extrema containing the global maximum.
    const std::size_t m = ref.size();
    std::size_t start = arg + 1 >= m ? arg + 1 - m : 0;
    start = std::min(start, ext.size() - m);
    for (std::size_t k = 0; k < m; ++k) ref[k] = ext[start + k].x;
  }
  throw RemezConvergenceError("remez_best: no convergence within " +
                                  std::to_string(options.max_iterations) +
                                  " iterations",
                              result);
}

EquioscillationReport equioscillation_check(const FunctionSpec& f,
                                            const RemezResult& r) {
  EquioscillationReport rep;
  const std::size_t m = r.reference.size();
  if (m == 0) return rep;
  std::vector<double> e(m);
  double fmax = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double fx = f(r.reference[i]);
    fmax = std::max(fmax, std::abs(fx));
    e[i] = fx - eval_series(r.poly, r.reference[i]);
  }
  rep.signs.resize(m);
  rep.min_reference_error = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    rep.signs[i] = e[i] > 0.0 ? 1 : (e[i] < 0.0 ? -1 : 0);
    rep.min_reference_error = std::min(rep.min_reference_error, std::abs(e[i]));
    rep.max_reference_error = std::max(rep.max_reference_error, std::abs(e[i]));
  }
  rep.alternation_count = rep.signs[0] != 0 ? 1 : 0;
  for (std::size_t i = 1; i < m; ++i) {
    if (rep.signs[i] != 0 && rep.signs[i] == -rep.signs[i - 1]) {
      ++rep.alternation_count;
    }
  }
  const double spread = rep.max_reference_error - rep.min_reference_error;
  rep.level_spread =
      rep.max_reference_error > 0.0 ? spread / rep.max_reference_error : 0.0;
  const double noise = noise_floor_of(fmax, r.poly.coeffs);
  const int expected = r.poly.degree() + 2;
  if (rep.max_reference_error <= noise) {
    // f is a polynomial of degree <= n: the certificate is vacuous.
    rep.pass = true;
    return rep;
  }
  rep.pass = rep.alternation_count == expected &&
             static_cast<int>(m) == expected &&
             spread <= 1e-6 * rep.max_reference_error + noise;
  return rep;
}

}  // namespace legapprox
