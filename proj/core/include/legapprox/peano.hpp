#pragma once

#include <functional>
#include <vector>

namespace legapprox {

/// (x - t)_+^r; zero whenever x <= t, including r == 0.
double truncated_power(double x, double t, int r);

struct PeanoKernelSpec {
  int m = 2;     // derivative order, >= 1
  int n = 2;     // projection degree, >= m - 1
  double x = 0;  // evaluation point in [-1, 1]

  void validate() const;  // throws DomainError
};

/// Peano kernel of the degree-n Legendre projection,
///   K_m(x, t) = [(x-t)_+^{m-1} - P_n((. - t)_+^{m-1})(x)] / (m-1)!.
///
/// Holds P_0..P_n at x so that many t can be evaluated cheaply. The
/// projection of the truncated power is a polynomial piece on [t, 1] and is
/// integrated exactly by a single Gauss panel.
class PeanoKernel {
 public:
  explicit PeanoKernel(const PeanoKernelSpec& spec);

  [[nodiscard]] double operator()(double t) const;
  [[nodiscard]] const PeanoKernelSpec& spec() const { return spec_; }

 private:
  PeanoKernelSpec spec_;
  std::vector<double> px_;  // P_k(x)
  double inv_factorial_ = 1.0;
};

double peano_kernel_eval(const PeanoKernelSpec& s, double t);

/// Legendre coefficients (degree n) of x -> (x - t)_+^r.
std::vector<double> truncated_power_coeffs(double t, int r, int n);

/// int_{-1}^{1} g(t) K_m(x, t) dt, split at t = x, with `order` Gauss points
/// per side.
double peano_integral(const PeanoKernelSpec& s,
                      const std::function<double(double)>& g, int order);

/// sup |K_m(x, t)| over a tensor grid of Chebyshev-Lobatto points in x and t
/// (plus the diagonal t = x, where the kernel peaks).
double peano_kernel_sup(int m, int n, int grid_points = 129);

struct PeanoReport {
  int m = 0;
  int n = 0;
  double boundary_residual = 0.0;       // max |K_m(x, +-1)|
  double orthogonality_residual = 0.0;  // max |int t^j K_m(x, t) dt|
  double derivative_residual = 0.0;     // max |dK_m/dt + K_{m-1}|
  std::vector<int> sweep_degrees;
  std::vector<double> sweep_sup;  // sup |K_m| for each sweep degree
  double decay_slope = 0.0;
  double decay_residual = 0.0;
  double claimed_slope = 0.0;  // -(m - 1)
};

/// Finite-difference step and the exclusion radius around t = x.
inline constexpr double kPeanoStep = 1e-5;
inline constexpr double kPeanoExclusion = 10 * kPeanoStep;

/// Numerical check of the kernel's boundary, orthogonality, derivative and
/// decay properties. The sweep runs over n = 16, 24, ..., 96.
PeanoReport peano_properties_report(int m, int n);

}  // namespace legapprox
