#include <gtest/gtest.h>
#include <omp.h>

#include <cmath>

#include "fracdiff/error.hpp"
#include "fracdiff/evolution.hpp"
#include "fracdiff/linalg.hpp"
#include "fracdiff/problems.hpp"
#include "fracdiff/steady.hpp"

using namespace fracdiff;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

NormPair final_errors(const Evolution1D& p, SolverOptions o = {}) {
  const auto u = cn_solve_1d(p, o);
  return norms(u, GridFunction1D::sample(p.grid, [&](double x) { return p.exact(x, p.t_end); }));
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs(const std::vector<double>& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

// Smooth data with nonzero boundary values, for splitting checks.
Evolution2D nonzero_boundary_problem(int m, int n) {
  const Grid1D g(0, 1, m);
  Evolution2D e{.grid = Grid2D{g, g}, .t_end = 0.5, .n_steps = n, .alpha = FracOrder(1.3),
                .beta = FracOrder(1.7)};
  e.k1x = 1.0;
  e.k2x = 0.5;
  e.k1y = 0.3;
  e.k2y = 1.0;
  e.source = [](double x, double y, double t) { return std::sin(3 * x + y) * std::exp(-t); };
  e.initial = [](double x, double y) { return 1.0 + x * x + 2 * y; };
  e.boundary = [](double x, double y, double t) { return (1.0 + x * x + 2 * y) * std::cos(t); };
  return e;
}

}  // namespace

TEST(CrankNicolson, TableFourValues) {
  const auto& spec = find_problem("example6_1");
  const auto e8 = final_errors(spec.make_evolution_1d(ProblemParams{1.5, 1.5, 0.0}, 8, {}));
  const auto e16 = final_errors(spec.make_evolution_1d(ProblemParams{1.5, 1.5, 0.0}, 16, {}));
  EXPECT_LT(rel(e16.l2, 8.0137e-06), 1e-3);
  EXPECT_NEAR(std::log2(e8.l2 / e16.l2), 3.9982, 1e-3);
  const auto t32 = final_errors(spec.make_evolution_1d(ProblemParams{1.9, 1.5, 1.5}, 32, {}));
  EXPECT_LT(rel(t32.l2, 9.2998e-08), 1e-3);
}

TEST(CrankNicolson, TwoSidedTableValue) {
  const auto e = final_errors(find_problem("example6_2").make_evolution_1d(ProblemParams{1.1, 1.5, 0.0}, 32, {}));
  EXPECT_LT(rel(e.l2, 5.6349e-09), 1e-3);
  EXPECT_LT(rel(e.linf, 9.1789e-09), 1e-3);
}

TEST(CrankNicolson, FftBackendMatchesDense) {
  for (const char* name : {"example6_1", "example6_2"}) {
    const auto p = find_problem(name).make_evolution_1d(ProblemParams{1.7, 1.5, 0.0}, 48, {});
    const auto dense = cn_solve_1d(p, {Execution::serial, MatvecBackend::dense});
    const auto fft = cn_solve_1d(p, {Execution::serial, MatvecBackend::fft});
    EXPECT_LT(max_abs_diff(dense.values, fft.values), 1e-10 * max_abs(dense.values)) << name;
  }
}

TEST(CrankNicolson, StaysAtDiscreteSteadyState) {
  const double alpha = 1.6, lam = 1.5;
  const auto steady = find_problem("example5_1").make_steady(ProblemParams{alpha, 1.5, lam}, 32);
  const auto us = solve_steady(steady);
  const Grid1D g = steady.grid;
  Evolution1D e{.grid = g, .t_end = 1.0, .n_steps = 50,
                .params = FracParams{FracOrder(alpha), Tempering(lam), 1.0, 0.0}};
  e.source = [&](double x, double) { return -steady.source(x); };
  e.initial = [&](double x) { return us[static_cast<std::size_t>(std::lround(x / g.h()))]; };
  e.phi_a = [&](double) { return steady.ua; };
  e.phi_b = [&](double) { return steady.ub; };
  const auto u = cn_solve_1d(e);
  EXPECT_LT(max_abs_diff(u.values, us.values), 1e-10);
}

TEST(CrankNicolson, ZeroDataStaysZero) {
  const Grid1D g(0, 1, 16);
  Evolution1D e{.grid = g, .t_end = 1.0, .n_steps = 10,
                .params = FracParams{FracOrder(1.5), Tempering(), 1.0, 1.0}};
  e.source = [](double, double) { return 0.0; };
  e.initial = [](double) { return 0.0; };
  e.phi_a = e.phi_b = [](double) { return 0.0; };
  for (double v : cn_solve_1d(e).values) EXPECT_EQ(v, 0.0);
}

TEST(CrankNicolson, UnconditionalStabilityProbe) {
  for (int m : {16, 64, 256}) {
    const double h = 1.0 / m;
    const int n = static_cast<int>(std::lround(1.0 / std::sqrt(h)));
    const auto p = find_problem("example6_2").make_evolution_1d(
        ProblemParams{1.5, 1.5, 0.0}, m, TauRule{TauRuleKind::fixed_steps, n});
    const GridFunction1D zero(p.grid);
    const double initial = norms(GridFunction1D::sample(p.grid, p.initial), zero).l2;
    const double final = norms(cn_solve_1d(p), zero).l2;
    EXPECT_TRUE(std::isfinite(final));
    EXPECT_LE(final, 10.0 * initial);
  }
}

TEST(CrankNicolson, DeterministicAndStepwise) {
  const auto p = find_problem("example6_1").make_evolution_1d(ProblemParams{1.3, 1.5, 0.5}, 32, {});
  const auto a = cn_solve_1d(p);
  const auto b = cn_solve_1d(p);
  EXPECT_EQ(a.values, b.values);
  CrankNicolson1D stepper(p);
  for (int i = 0; i < p.n_steps; ++i) stepper.step();
  EXPECT_EQ(stepper.step_index(), p.n_steps);
  EXPECT_NEAR(stepper.time(), 1.0, 1e-12);
  EXPECT_EQ(stepper.current().values, a.values);
}

TEST(CrankNicolson, Validation) {
  auto p = find_problem("example6_1").make_evolution_1d(ProblemParams{1.3, 1.5, 0.0}, 8, {});
  p.n_steps = 0;
  EXPECT_THROW(cn_solve_1d(p), InvalidArgument);
  p.n_steps = 4;
  p.phi_b = nullptr;
  EXPECT_THROW(cn_solve_1d(p), InvalidArgument);
}

TEST(CrankNicolson, CompatibilityWarnings) {
  const auto& spec = find_problem("example6_1");
  auto p = spec.make_evolution_1d(ProblemParams{1.3, 1.5, 0.0}, 8, {});
  EXPECT_TRUE(compatibility_warnings(p).empty());
  p.params.k2 = 1.0;
  EXPECT_EQ(compatibility_warnings(p).size(), 1u);
}

TEST(Adi, TableSixValueBothVariants) {
  const auto p = find_problem("example6_3").make_evolution_2d(ProblemParams{1.1, 1.5, 0.0}, 16, {});
  const auto ex = GridFunction2D::sample(p.grid, [&](double x, double y) { return p.exact(x, y, 1.0); });
  const auto d = adi_solve_2d(p, AdiVariant::douglas);
  const auto k = adi_solve_2d(p, AdiVariant::dyakonov);
  EXPECT_LT(rel(norms(d, ex).l2, 5.3915e-05), 1e-3);
  EXPECT_LT(rel(norms(k, ex).l2, 5.3915e-05), 1e-3);
  EXPECT_LT(max_abs_diff(d.values, k.values), 1e-9);
}

TEST(Adi, VariantsAgreeWithNonzeroBoundary) {
  for (int n : {1, 5}) {
    const auto p = nonzero_boundary_problem(12, n);
    const auto d = adi_solve_2d(p, AdiVariant::douglas);
    const auto k = adi_solve_2d(p, AdiVariant::dyakonov);
    EXPECT_LT(max_abs_diff(d.values, k.values), 1e-10 * max_abs(d.values)) << n;
  }
}

TEST(Adi, ZeroDataStaysZero) {
  const Grid1D g(0, 1, 8);
  Evolution2D e{.grid = Grid2D{g, g}, .t_end = 1.0, .n_steps = 4};
  e.source = [](double, double, double) { return 0.0; };
  e.initial = [](double, double) { return 0.0; };
  e.boundary = [](double, double, double) { return 0.0; };
  for (auto v : {AdiVariant::douglas, AdiVariant::dyakonov})
    for (double x : adi_solve_2d(e, v).values) EXPECT_EQ(x, 0.0);
}

TEST(Adi, SerialAndParallelBitwiseEqual) {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  const auto p = nonzero_boundary_problem(20, 6);
  for (auto v : {AdiVariant::douglas, AdiVariant::dyakonov}) {
    const auto s = adi_solve_2d(p, v, {Execution::serial, MatvecBackend::dense});
    const auto q = adi_solve_2d(p, v, {Execution::parallel, MatvecBackend::dense});
    EXPECT_EQ(s.values, q.values);
  }
  omp_set_num_threads(saved);
}

TEST(Adi, BoundaryRingFollowsData) {
  const auto p = nonzero_boundary_problem(8, 3);
  const auto u = adi_solve_2d(p, AdiVariant::dyakonov);
  for (int s = 0; s <= 8; ++s) {
    EXPECT_DOUBLE_EQ(u.at(0, s), p.boundary(0.0, s / 8.0, 0.5));
    EXPECT_DOUBLE_EQ(u.at(8, s), p.boundary(1.0, s / 8.0, 0.5));
  }
}

TEST(Adi, Validation) {
  auto p = nonzero_boundary_problem(8, 2);
  p.k1y = p.k2y = 0.0;
  EXPECT_THROW(AdiStepper2D(p, AdiVariant::douglas), InvalidArgument);
  p = nonzero_boundary_problem(8, 2);
  p.boundary = nullptr;
  EXPECT_THROW(AdiStepper2D(p, AdiVariant::douglas), InvalidArgument);
}
