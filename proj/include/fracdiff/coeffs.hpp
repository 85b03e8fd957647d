#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace fracdiff {

/// Fractional order alpha. Construction accepts the closed interval [1, 2] so
/// that analysis routines can sample the endpoints; solvers additionally
/// require the open interval via require_open().
class FracOrder {
 public:
  explicit FracOrder(double alpha);

  double value() const noexcept { return alpha_; }
  bool is_open_interior() const noexcept { return alpha_ > 1.0 && alpha_ < 2.0; }
  /// Throws InvalidArgument unless 1 < alpha < 2.
  const FracOrder& require_open() const;

 private:
  double alpha_;
};

/// Tempering parameter lambda >= 0 (units 1/length).
class Tempering {
 public:
  Tempering() = default;
  explicit Tempering(double lambda);

  double value() const noexcept { return lambda_; }
  bool is_zero() const noexcept { return lambda_ == 0.0; }

 private:
  double lambda_ = 0.0;
};

enum class QuasiCompactOrder { fourth = 4, fifth = 5 };

/// Parses 4 or 5; anything else throws InvalidArgument.
QuasiCompactOrder quasi_compact_order(int order);

struct GrunwaldWeights {
  FracOrder alpha;
  std::vector<double> g;  // g[0..n], coefficients of (1 - z)^alpha
};

/// Coefficients a_{p,l} of ((1 - e^{-z}) / z)^alpha e^{pz} for l = 0..4.
struct ShiftExpansionCoeffs {
  int p = 0;
  std::array<double, 5> a{};
};

struct QC4Coeffs {
  double mu1 = 0.0;
  double mu0 = 0.0;
  double mu_m1 = 0.0;
  double b2 = 0.0;
};

struct QC5Coeffs {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double mu1 = 0.0;
  double mu0 = 0.0;
  double mu_m1 = 0.0;
};

/// Weights of the three shifted Grunwald sums p = 1, 0, -1.
struct ShiftCombination {
  double mu1 = 0.0;
  double mu0 = 0.0;
  double mu_m1 = 0.0;
};

struct FusedWeights {
  FracOrder alpha;
  Tempering lambda;
  double h = 0.0;
  QuasiCompactOrder order = QuasiCompactOrder::fourth;
  std::vector<double> w;  // w[0..n]
};

/// g[k] = g[k-1] * (1 - (alpha + 1) / k), g[0] = 1. Rejects alpha outside (1, 2].
GrunwaldWeights grunwald_weights(FracOrder alpha, std::size_t n);

/// Closed forms for a_{p,0..4}; p must be -1, 0 or 1.
ShiftExpansionCoeffs shift_expansion_coeffs(FracOrder alpha, int p);

QC4Coeffs qc4_coeffs(FracOrder alpha);

/// Throws SolverError if the common denominator vanishes. It has one root in (1, 2),
/// near alpha = 1.8082381, where the coefficients grow without bound.
QC5Coeffs qc5_coeffs(FracOrder alpha);

ShiftCombination shift_combination(FracOrder alpha, QuasiCompactOrder order);

/// Merges the three shifted weight sequences into one convolution kernel.
/// For lambda > 0 entry k carries the extra factor exp(-(k - 1) lambda h).
FusedWeights fused_weights(FracOrder alpha, Tempering lambda, double h, std::size_t n,
                           QuasiCompactOrder order = QuasiCompactOrder::fourth);

}  // namespace fracdiff
