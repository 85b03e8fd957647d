#include "fracdiff/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fracdiff {

namespace {

constexpr double kPi = std::numbers::pi;

// S = (2 sin(sigma/2))^alpha i e^{i d} T with d = (alpha - 1) pi / 2 and
// T = sum_p mu_p e^{i (p - alpha/2) sigma}. sin d and cos d are taken as sines of
// (alpha - 1) pi / 2 and (2 - alpha) pi / 2 so they vanish exactly at alpha = 1 and 2.
std::complex<double> symbol_nonnegative(const QC4Coeffs& c, double alpha, double sigma) {
  const double amp = std::pow(2.0 * std::sin(0.5 * sigma), alpha);
  const double sin_d = std::sin(0.5 * kPi * (alpha - 1.0));
  const double cos_d = std::sin(0.5 * kPi * (2.0 - alpha));
  const double th = -0.5 * alpha * sigma;
  const double re_t = c.mu1 * std::cos(th + sigma) + c.mu0 * std::cos(th) + c.mu_m1 * std::cos(th - sigma);
  const double im_t = c.mu1 * std::sin(th + sigma) + c.mu0 * std::sin(th) + c.mu_m1 * std::sin(th - sigma);
  return amp * std::complex<double>(-sin_d * re_t - cos_d * im_t, cos_d * re_t - sin_d * im_t);
}

double cn_factor(const QC4Coeffs& c, std::complex<double> s, double sigma, double half_ratio,
                 double k1, double k2) {
  const double sn = std::sin(0.5 * sigma);
  const double q1 = 1.0 - 4.0 * c.b2 * sn * sn;
  const std::complex<double> q2 = half_ratio * (k1 * s + k2 * std::conj(s));
  // |q1 + q2|^2 = |q1 - q2|^2 + 4 q1 Re q2 for real q1; avoids cancellation at large ratios
  return std::sqrt(1.0 + 4.0 * q1 * q2.real() / std::norm(q1 - q2));
}

}  // namespace

std::complex<double> weight_symbol(FracOrder alpha, double sigma) {
  const QC4Coeffs c = qc4_coeffs(alpha);
  const auto s = symbol_nonnegative(c, alpha.value(), std::abs(sigma));
  return sigma < 0.0 ? std::conj(s) : s;
}

double generating_function(FracOrder alpha, double x) {
  return 2.0 * symbol_nonnegative(qc4_coeffs(alpha), alpha.value(), std::abs(x)).real();
}

double amplification_factor_1d(FracOrder alpha, double sigma, double tau, double h, double k1,
                               double k2) {
  const QC4Coeffs c = qc4_coeffs(alpha);
  const double half_ratio = 0.5 * tau / std::pow(h, alpha.value());
  return cn_factor(c, weight_symbol(alpha, sigma), sigma, half_ratio, k1, k2);
}

double amplification_factor_2d(const AdiModeParams& p, double sigma1, double sigma2) {
  return amplification_factor_1d(p.alpha, sigma1, p.tau, p.hx, p.k1x, p.k2x) *
         amplification_factor_1d(p.beta, sigma2, p.tau, p.hy, p.k1y, p.k2y);
}

StabilityReport stability_scan(const std::vector<double>& alpha_grid,
                               const std::vector<double>& sigma_grid,
                               const std::vector<double>& ratio_grid) {
  StabilityReport report;
  const std::size_t na = alpha_grid.size(), ns = sigma_grid.size();
  if (na == 0 || ns == 0) return report;
  report.samples.resize(na * ns);

  constexpr double pairs[3][2] = {{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  const long long total = static_cast<long long>(na);
#pragma omp parallel for schedule(static)
  for (long long ia = 0; ia < total; ++ia) {
    const FracOrder alpha(alpha_grid[ia]);
    const QC4Coeffs c = qc4_coeffs(alpha);
    for (std::size_t is = 0; is < ns; ++is) {
      const double sigma = sigma_grid[is];
      SpectralSample& out = report.samples[ia * ns + is];
      out.alpha = alpha.value();
      out.sigma = sigma;
      out.f_value = generating_function(alpha, sigma);
      const auto s = symbol_nonnegative(c, alpha.value(), std::abs(sigma));
      const auto sym = sigma < 0.0 ? std::conj(s) : s;
      double amp = 0.0;
      for (const double r : ratio_grid) {
        for (const auto& k : pairs) amp = std::max(amp, cn_factor(c, sym, sigma, 0.5 * r, k[0], k[1]));
      }
      out.amp_modulus = amp;
    }
  }

  report.max_f = -INFINITY;
  report.max_amp = 0.0;
  for (const auto& smp : report.samples) {
    report.max_f = std::max(report.max_f, smp.f_value);
    report.max_amp = std::max(report.max_amp, smp.amp_modulus);
    if (!(smp.f_value <= kStabilityTolerance)) ++report.f_violations;
    if (!(smp.amp_modulus <= 1.0 + kStabilityTolerance)) ++report.amp_violations;
  }
  return report;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

StabilityReport default_stability_scan(std::size_t alpha_points, std::size_t sigma_points) {
  return stability_scan(linspace(1.0, 2.0, alpha_points), linspace(0.0, kPi, sigma_points),
                        {0.1, 1.0, 10.0, 1000.0});
}

}  // namespace fracdiff
