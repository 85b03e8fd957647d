#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fracdiff/coeffs.hpp"

namespace fracdiff {

/// Real symbol of A + A^T for the fourth-order fused weights. Even in x; defined on [-pi, pi].
double generating_function(FracOrder alpha, double x);

/// sum_k w_k exp(-i (k - 1) sigma) for the (untempered, fourth-order) fused weights, in the
/// closed exponential form. The symbol of A; A^T has the conjugate.
std::complex<double> weight_symbol(FracOrder alpha, double sigma);

/// |v| of the Crank-Nicolson scheme for one Fourier mode.
double amplification_factor_1d(FracOrder alpha, double sigma, double tau, double h, double k1,
                               double k2);

struct AdiModeParams {
  FracOrder alpha{1.5};
  FracOrder beta{1.5};
  double tau = 0.0;
  double hx = 0.0;
  double hy = 0.0;
  double k1x = 1.0, k2x = 0.0, k1y = 1.0, k2y = 0.0;
};

/// |G(sigma1, sigma2)| of the ADI scheme: the product of the two directional factors.
double amplification_factor_2d(const AdiModeParams& p, double sigma1, double sigma2);

struct SpectralSample {
  double alpha = 0.0;
  double sigma = 0.0;
  double f_value = 0.0;
  double amp_modulus = 0.0;  // max over ratios and coefficient pairs
};

struct StabilityReport {
  std::vector<SpectralSample> samples;
  double max_f = 0.0;
  double max_amp = 0.0;
  std::size_t f_violations = 0;
  std::size_t amp_violations = 0;
  bool empty() const noexcept { return samples.empty(); }
  bool passed() const noexcept { return f_violations == 0 && amp_violations == 0; }
};

inline constexpr double kStabilityTolerance = 1e-12;

/// Evaluates f and |v| on the tensor grid, with ratio r = tau / h^alpha and coefficient pairs
/// (1,0), (0,1), (1,1). Violations are counted, never thrown.
StabilityReport stability_scan(const std::vector<double>& alpha_grid,
                               const std::vector<double>& sigma_grid,
                               const std::vector<double>& ratio_grid);

/// n equispaced points on [lo, hi] (n == 1 gives lo).
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// 101 alphas on [1, 2], 721 sigmas on [0, pi], r in {0.1, 1, 10, 1000}.
StabilityReport default_stability_scan(std::size_t alpha_points = 101,
                                       std::size_t sigma_points = 721);

}  // namespace fracdiff
