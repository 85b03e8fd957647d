#include "fracdiff/coeffs.hpp"

#include <cmath>
#include <string>

#include "fracdiff/error.hpp"

namespace fracdiff {

FracOrder::FracOrder(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || alpha < 1.0 || alpha > 2.0) {
    throw InvalidArgument("fractional order must lie in [1, 2], got " + std::to_string(alpha));
  }
}

const FracOrder& FracOrder::require_open() const {
  if (!is_open_interior()) {
    throw InvalidArgument("fractional order must satisfy 1 < alpha < 2, got " +
                          std::to_string(alpha_));
  }
  return *this;
}

Tempering::Tempering(double lambda) : lambda_(lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw InvalidArgument("tempering parameter must be finite and >= 0, got " +
                          std::to_string(lambda));
  }
}

QuasiCompactOrder quasi_compact_order(int order) {
  if (order == 4) return QuasiCompactOrder::fourth;
  if (order == 5) return QuasiCompactOrder::fifth;
  throw InvalidArgument("quasi-compact order must be 4 or 5, got " + std::to_string(order));
}

GrunwaldWeights grunwald_weights(FracOrder alpha, std::size_t n) {
  const double a = alpha.value();
  if (!(a > 1.0)) {
    throw InvalidArgument("Grunwald weights need alpha in (1, 2]");
  }
  GrunwaldWeights out{alpha, std::vector<double>(n + 1)};
  out.g[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    out.g[k] = out.g[k - 1] * (1.0 - (a + 1.0) / static_cast<double>(k));
  }
  return out;
}

ShiftExpansionCoeffs shift_expansion_coeffs(FracOrder alpha, int p) {
  if (p < -1 || p > 1) {
    throw InvalidArgument("shift must be -1, 0 or 1 on a bounded domain, got " +
                          std::to_string(p));
  }
  const double a = alpha.value();
  const double q = static_cast<double>(p);
  const double a2 = a * a, a3 = a2 * a, a4 = a3 * a;
  const double q2 = q * q, q3 = q2 * q, q4 = q3 * q;

  ShiftExpansionCoeffs c;
  c.p = p;
  c.a[0] = 1.0;
  c.a[1] = q - a / 2.0;
  c.a[2] = (a + 3.0 * a2 - 12.0 * a * q + 12.0 * q2) / 24.0;
  c.a[3] = (8.0 * q3 + 2.0 * q * a - 12.0 * q2 * a - a2 + 6.0 * q * a2 - a3) / 48.0;
  c.a[4] = (15.0 * a4 - 120.0 * a3 * q + 30.0 * a3 + 360.0 * a2 * q2 - 120.0 * a2 * q +
            5.0 * a2 - 480.0 * a * q3 + 120.0 * a * q2 - 2.0 * a + 240.0 * q4) /
           5760.0;
  return c;
}

QC4Coeffs qc4_coeffs(FracOrder alpha) {
  const double a = alpha.value();
  return QC4Coeffs{
      .mu1 = (1.0 + a) * (2.0 + a) / 12.0,
      .mu0 = -(a - 2.0) * (a + 2.0) / 6.0,
      .mu_m1 = (a - 2.0) * (a - 1.0) / 12.0,
      .b2 = (4.0 + a - a * a) / 24.0,
  };
}

QC5Coeffs qc5_coeffs(FracOrder alpha) {
  const double a = alpha.value();
  const double a2 = a * a, a3 = a2 * a, a4 = a3 * a;
  const double den = 1724.0 - 2.0 * a - 570.0 * a2 - 30.0 * a3 + 30.0 * a4;
  if (std::abs(den) < 1e-12) {
    throw SolverError("fifth-order coefficient system is degenerate at alpha = " +
                      std::to_string(a));
  }
  return QC5Coeffs{
      .gamma1 = (350.0 + 331.0 * a - 15.0 * a2 - 75.0 * a3 - 15.0 * a4) / den,
      .gamma2 = (566.0 - 329.0 * a - 135.0 * a2 + 105.0 * a3 - 15.0 * a4) / den,
      .mu1 = (566.0 + 329.0 * a - 135.0 * a2 - 105.0 * a3 - 15.0 * a4) / den,
      .mu0 = 2.0 * (862.0 + a - 285.0 * a2 + 15.0 * a3 + 15.0 * a4) / den,
      .mu_m1 = (350.0 - 331.0 * a - 15.0 * a2 + 75.0 * a3 - 15.0 * a4) / den,
  };
}

ShiftCombination shift_combination(FracOrder alpha, QuasiCompactOrder order) {
  if (order == QuasiCompactOrder::fourth) {
    const auto c = qc4_coeffs(alpha);
    return {c.mu1, c.mu0, c.mu_m1};
  }
  const auto c = qc5_coeffs(alpha);
  return {c.mu1, c.mu0, c.mu_m1};
}

FusedWeights fused_weights(FracOrder alpha, Tempering lambda, double h, std::size_t n,
                           QuasiCompactOrder order) {
  if (n < 2) throw InvalidArgument("fused weights need n >= 2");
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("grid spacing must be positive");

  const auto mu = shift_combination(alpha, order);
  const auto g = grunwald_weights(alpha, n).g;

  FusedWeights out{alpha, lambda, h, order, std::vector<double>(n + 1)};
  auto& w = out.w;
  w[0] = mu.mu1 * g[0];
  w[1] = mu.mu0 * g[0] + mu.mu1 * g[1];
  for (std::size_t k = 2; k <= n; ++k) {
    w[k] = mu.mu1 * g[k] + mu.mu0 * g[k - 1] + mu.mu_m1 * g[k - 2];
  }
  if (!lambda.is_zero()) {
    const double lh = lambda.value() * h;
    for (std::size_t k = 0; k <= n; ++k) {
      w[k] *= std::exp(-(static_cast<double>(k) - 1.0) * lh);
    }
  }
  return out;
}

}  // namespace fracdiff
