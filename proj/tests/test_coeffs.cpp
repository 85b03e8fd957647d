#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "fracdiff/coeffs.hpp"
#include "fracdiff/error.hpp"
#include "fracdiff/linalg.hpp"

using namespace fracdiff;

namespace {

std::vector<double> random_alphas(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(1.0 + 1e-6, 2.0 - 1e-6);
  std::vector<double> out(n);
  for (auto& a : out) a = dist(rng);
  return out;
}

// g_k = Gamma(k - alpha) / (Gamma(-alpha) Gamma(k + 1)) through log-Gamma with explicit signs.
double grunwald_gamma_oracle(double alpha, int k) {
  const double sign = (std::tgamma(k - alpha) > 0 ? 1.0 : -1.0) * (std::tgamma(-alpha) > 0 ? 1.0 : -1.0);
  return sign * std::exp(std::lgamma(k - alpha) - std::lgamma(-alpha) - std::lgamma(k + 1.0));
}

// Taylor coefficients of ((1 - e^{-z}) / z)^alpha e^{pz} by the Cauchy integral on |z| = r.
std::array<double, 5> taylor_oracle(double alpha, int p) {
  constexpr int n = 128;
  constexpr double r = 0.5;
  std::array<double, 5> out{};
  for (int l = 0; l < 5; ++l) {
    std::complex<double> sum = 0.0;
    for (int k = 0; k < n; ++k) {
      const double th = 2.0 * std::numbers::pi * k / n;
      const std::complex<double> z = std::polar(r, th);
      const auto f = std::pow((1.0 - std::exp(-z)) / z, alpha) * std::exp(double(p) * z);
      sum += f * std::polar(std::pow(r, -l), -l * th);
    }
    out[l] = (sum / double(n)).real();
  }
  return out;
}

}  // namespace

TEST(FracOrder, RejectsOutsideClosedInterval) {
  EXPECT_THROW(FracOrder(0.5), InvalidArgument);
  EXPECT_THROW(FracOrder(2.5), InvalidArgument);
  EXPECT_THROW(FracOrder(std::nan("")), InvalidArgument);
  EXPECT_NO_THROW(FracOrder(1.0));
  EXPECT_THROW(FracOrder(1.0).require_open(), InvalidArgument);
  EXPECT_THROW(FracOrder(2.0).require_open(), InvalidArgument);
  EXPECT_NO_THROW(FracOrder(1.5).require_open());
  EXPECT_THROW(Tempering(-0.1), InvalidArgument);
}

TEST(Grunwald, LeadingTerms) {
  EXPECT_EQ(grunwald_weights(FracOrder(1.5), 0).g, std::vector<double>{1.0});
  EXPECT_DOUBLE_EQ(grunwald_weights(FracOrder(1.5), 1).g[1], -1.5);
}

TEST(Grunwald, SecondWeightMatchesFiniteDifferenceTaylor) {
  // (1 - z)^1.5: second Taylor coefficient from a central second difference at z = 0.
  const double h = 1e-4;
  auto f = [](double z) { return std::pow(1.0 - z, 1.5); };
  const double second = (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h) / 2.0;
  EXPECT_NEAR(second, 0.375, 1e-6);
  EXPECT_DOUBLE_EQ(grunwald_weights(FracOrder(1.5), 2).g[2], 0.375);
}

TEST(Grunwald, RecurrenceMatchesGammaRatio) {
  for (double a : random_alphas(20, 7)) {
    const auto g = grunwald_weights(FracOrder(a), 50).g;
    for (int k = 0; k <= 50; ++k) {
      const double ref = grunwald_gamma_oracle(a, k);
      EXPECT_NEAR(g[k], ref, 1e-12 * std::abs(ref)) << "alpha=" << a << " k=" << k;
    }
  }
}

TEST(Grunwald, SignsAndPartialSums) {
  for (double a : {1.1, 1.5, 1.9}) {
    const auto g = grunwald_weights(FracOrder(a), 100000).g;
    double sum = g[0];
    for (std::size_t k = 1; k < g.size(); ++k) {
      if (k >= 2) ASSERT_GT(g[k], 0.0);
      sum += g[k];
      ASSERT_LT(sum, 0.0);
    }
    EXPECT_LT(std::abs(sum), 1e-3);
  }
}

TEST(Grunwald, RejectsAlphaOne) { EXPECT_THROW(grunwald_weights(FracOrder(1.0), 3), InvalidArgument); }

TEST(ShiftExpansion, ClosedFormExamples) {
  EXPECT_DOUBLE_EQ(shift_expansion_coeffs(FracOrder(1.5), 1).a[1], 0.25);
  EXPECT_DOUBLE_EQ(shift_expansion_coeffs(FracOrder(1.5), 0).a[2], 0.34375);
  for (int p : {-1, 0, 1}) EXPECT_EQ(shift_expansion_coeffs(FracOrder(1.3), p).a[0], 1.0);
  EXPECT_THROW(shift_expansion_coeffs(FracOrder(1.5), 2), InvalidArgument);
}

TEST(ShiftExpansion, MatchesNumericalTaylorExpansion) {
  for (double a : random_alphas(10, 11)) {
    for (int p : {-1, 0, 1}) {
      const auto c = shift_expansion_coeffs(FracOrder(a), p).a;
      const auto ref = taylor_oracle(a, p);
      for (int l = 0; l < 5; ++l) EXPECT_NEAR(c[l], ref[l], 1e-12) << a << ' ' << p << ' ' << l;
    }
  }
}

TEST(QC4, ValuesAtOnePointFive) {
  const auto c = qc4_coeffs(FracOrder(1.5));
  EXPECT_NEAR(c.mu1, 0.729166667, 1e-9);
  EXPECT_NEAR(c.mu0, 0.291666667, 1e-9);
  EXPECT_NEAR(c.mu_m1, -0.020833333, 1e-9);
  EXPECT_NEAR(c.b2, 0.135416667, 1e-9);
}

TEST(QC4, Endpoints) {
  EXPECT_DOUBLE_EQ(qc4_coeffs(FracOrder(2.0)).b2, 1.0 / 12.0);
  EXPECT_DOUBLE_EQ(qc4_coeffs(FracOrder(1.0)).b2, 1.0 / 6.0);
}

TEST(QC4, OrderConditions) {
  for (double a : random_alphas(20, 3)) {
    const auto c = qc4_coeffs(FracOrder(a));
    const auto p1 = shift_expansion_coeffs(FracOrder(a), 1).a;
    const auto p0 = shift_expansion_coeffs(FracOrder(a), 0).a;
    const auto m1 = shift_expansion_coeffs(FracOrder(a), -1).a;
    auto weighted = [&](int l) { return c.mu1 * p1[l] + c.mu0 * p0[l] + c.mu_m1 * m1[l]; };
    EXPECT_NEAR(c.mu1 + c.mu0 + c.mu_m1, 1.0, 1e-12);
    EXPECT_NEAR(weighted(1), 0.0, 1e-12);
    EXPECT_NEAR(weighted(3), 0.0, 1e-12);
    EXPECT_NEAR(weighted(2), c.b2, 1e-12);
    EXPECT_GT(c.b2, 1.0 / 12.0);
    EXPECT_LT(c.b2, 1.0 / 6.0);
  }
}

TEST(QC5, GammaOneAtOnePointFive) {
  EXPECT_NEAR(qc5_coeffs(FracOrder(1.5)).gamma1, 483.6875 / 489.125, 1e-14);
}

TEST(QC5, ClosedFormSolvesEliminationSystem) {
  for (double a : random_alphas(20, 5)) {
    const FracOrder al(a);
    const auto p1 = shift_expansion_coeffs(al, 1).a;
    const auto p0 = shift_expansion_coeffs(al, 0).a;
    const auto m1 = shift_expansion_coeffs(al, -1).a;
    // unknowns: mu1, mu0, mu_m1, gamma1, gamma2
    DenseMatrix m(5, 5);
    std::vector<double> rhs{1, 0, 0, 0, 0};
    const double g1[5] = {-1.0, 1.0, -0.5, 1.0 / 6.0, -1.0 / 24.0};
    const double g2[5] = {-1.0, -1.0, -0.5, -1.0 / 6.0, -1.0 / 24.0};
    for (int l = 0; l < 5; ++l) {
      m(l, 0) = p1[l];
      m(l, 1) = p0[l];
      m(l, 2) = m1[l];
      m(l, 3) = g1[l];
      m(l, 4) = g2[l];
    }
    const auto x = DenseLU(m).solve(rhs);
    const auto c = qc5_coeffs(al);
    const double closed[5] = {c.mu1, c.mu0, c.mu_m1, c.gamma1, c.gamma2};
    double scale = 1.0;
    for (double v : closed) scale = std::max(scale, std::abs(v));
    for (int i = 0; i < 5; ++i) EXPECT_NEAR(closed[i], x[i], 1e-10 * scale) << "alpha=" << a;
    const auto r = m * std::span<const double>(closed, 5);
    for (int l = 0; l < 5; ++l) EXPECT_NEAR(r[l], rhs[l], 1e-12 * scale);
    EXPECT_NEAR(c.mu1 + c.mu0 + c.mu_m1 - c.gamma1 - c.gamma2, 1.0, 1e-12 * scale);
  }
}

TEST(QC5, DenominatorRootInsideInterval) {
  const double root = 1.8082381;
  EXPECT_GT(std::abs(qc5_coeffs(FracOrder(root)).mu0), 1e6);
  EXPECT_LT(std::abs(qc5_coeffs(FracOrder(1.5)).mu0), 10.0);
  const auto below = qc5_coeffs(FracOrder(root - 1e-3));
  const auto above = qc5_coeffs(FracOrder(root + 1e-3));
  EXPECT_LT(below.mu0 * above.mu0, 0.0);
}

TEST(FusedWeights, UntemperedExamples) {
  const auto w = fused_weights(FracOrder(1.5), Tempering(), 0.1, 10).w;
  EXPECT_NEAR(w[0], 0.729166667, 1e-9);
  EXPECT_NEAR(w[1], -0.802083333, 1e-9);
}

TEST(FusedWeights, FusionFormula) {
  for (double a : random_alphas(20, 9)) {
    const FracOrder al(a);
    const auto c = qc4_coeffs(al);
    const auto g = grunwald_weights(al, 30).g;
    const auto w = fused_weights(al, Tempering(), 0.05, 30).w;
    EXPECT_DOUBLE_EQ(w[0], c.mu1 * g[0]);
    EXPECT_NEAR(w[1], c.mu0 * g[0] + c.mu1 * g[1], 1e-15);
    for (int k = 2; k <= 30; ++k) {
      EXPECT_NEAR(w[k], c.mu1 * g[k] + c.mu0 * g[k - 1] + c.mu_m1 * g[k - 2], 1e-15);
    }
  }
}

TEST(FusedWeights, TemperedFactor) {
  const auto w0 = fused_weights(FracOrder(1.5), Tempering(), 0.1, 20).w;
  const auto wl = fused_weights(FracOrder(1.5), Tempering(2.0), 0.1, 20).w;
  EXPECT_NEAR(wl[0], w0[0] * std::exp(0.2), 1e-15);
  for (int k = 0; k <= 20; ++k) EXPECT_NEAR(wl[k], w0[k] * std::exp(-(k - 1) * 0.2), 1e-14);
}

TEST(FusedWeights, TemperedTendsToUntempered) {
  const auto w0 = fused_weights(FracOrder(1.7), Tempering(), 0.1, 20).w;
  double prev = INFINITY;
  for (double lam : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const auto wl = fused_weights(FracOrder(1.7), Tempering(lam), 0.1, 20).w;
    double diff = 0.0;
    for (int k = 0; k <= 20; ++k) diff = std::max(diff, std::abs(wl[k] - w0[k]));
    EXPECT_LT(diff, prev);
    prev = diff;
  }
  EXPECT_LT(prev, 1e-8);
}

TEST(FusedWeights, FifthOrderUsesQC5Shifts) {
  const auto c = qc5_coeffs(FracOrder(1.3));
  const auto w = fused_weights(FracOrder(1.3), Tempering(), 0.1, 5, QuasiCompactOrder::fifth).w;
  EXPECT_DOUBLE_EQ(w[0], c.mu1);
}

TEST(FusedWeights, ParameterChecks) {
  EXPECT_THROW(fused_weights(FracOrder(1.5), Tempering(), 0.1, 1), InvalidArgument);
  EXPECT_THROW(fused_weights(FracOrder(1.5), Tempering(), 0.0, 4), InvalidArgument);
  EXPECT_THROW(quasi_compact_order(3), InvalidArgument);
}
