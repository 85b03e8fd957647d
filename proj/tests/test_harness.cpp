#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "fracdiff/convergence.hpp"
#include "fracdiff/error.hpp"
#include "fracdiff/problems.hpp"

using namespace fracdiff;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Registry, SevenProblemsWithExactSolutions) {
  const auto& r = problem_registry();
  ASSERT_EQ(r.size(), 7u);
  std::set<std::string> names;
  for (const auto& p : r) {
    names.insert(p.name);
    switch (p.kind) {
      case ProblemKind::steady1d:
        EXPECT_TRUE(p.make_steady(p.defaults, 8).exact);
        break;
      case ProblemKind::evolve1d:
        EXPECT_TRUE(p.make_evolution_1d(p.defaults, 8, {}).exact);
        break;
      case ProblemKind::evolve2d:
        EXPECT_TRUE(p.make_evolution_2d(p.defaults, 8, {}).exact);
        break;
    }
  }
  EXPECT_EQ(names, (std::set<std::string>{"example2_1", "example2_4", "example5_1", "example5_4",
                                          "example6_1", "example6_2", "example6_3"}));
  EXPECT_THROW(find_problem("example9_9"), InvalidArgument);
}

TEST(Registry, InitialAndBoundaryDataMatchExactSolution) {
  for (const auto& name : {"example6_1", "example6_2"}) {
    const auto p = find_problem(name).make_evolution_1d(ProblemParams{1.4, 1.5, 0.9}, 8, {});
    for (double x : {0.0, 0.3, 1.0}) EXPECT_NEAR(p.initial(x), p.exact(x, 0.0), 1e-15);
    for (double t : {0.0, 0.5, 1.0}) {
      EXPECT_NEAR(p.phi_a(t), p.exact(0.0, t), 1e-15);
      EXPECT_NEAR(p.phi_b(t), p.exact(1.0, t), 1e-15);
    }
  }
}

TEST(Registry, TauRule) {
  EXPECT_EQ((TauRule{}).steps(1.0, 1.0 / 16), 256);
  EXPECT_EQ((TauRule{TauRuleKind::fixed_steps, 7}).steps(1.0, 0.1), 7);
  EXPECT_THROW((TauRule{TauRuleKind::fixed_steps, 0}).steps(1.0, 0.1), InvalidArgument);
}

TEST(GammaRatio, AgreesWithTgamma) {
  for (double a = 1.0; a <= 12.0; a += 0.37) {
    for (double b = 1.0; b <= 12.0; b += 0.53) {
      const double ref = std::tgamma(a) / std::tgamma(b);
      EXPECT_NEAR(gamma_ratio(a, b), ref, 1e-13 * std::abs(ref));
    }
  }
  EXPECT_THROW(gamma_ratio(-0.5, 1.0), InvalidArgument);
}

TEST(PolynomialDerivative, IntegerOrdersMatchClassicalDerivatives) {
  // At alpha = 1 and 2 the Riemann-Liouville derivative is the ordinary one.
  auto p = [](double x) { return std::pow(x * (1 - x), 5); };
  const double h = 1e-4;
  for (double x : {0.2, 0.5, 0.8}) {
    const double d1 = (p(x + h) - p(x - h)) / (2 * h);
    const double d2 = (p(x + h) - 2 * p(x) + p(x - h)) / (h * h);
    EXPECT_NEAR(left_derivative_x5_1mx5(1.0, x), d1, 1e-7);
    EXPECT_NEAR(left_derivative_x5_1mx5(2.0, x), d2, 1e-5);
    EXPECT_NEAR(two_sided_derivative_x5_1mx5(2.0, x), 2 * d2, 2e-5);
  }
}

TEST(Rates, ObservedRate) {
  EXPECT_DOUBLE_EQ(*observed_rate(16.0, 1.0), 4.0);
  EXPECT_FALSE(observed_rate(std::nullopt, 1.0));
  EXPECT_FALSE(observed_rate(0.0, 0.0));
  EXPECT_FALSE(observed_rate(1.0, 0.0));
}

TEST(Convergence, ExactSamplerGivesZeroErrorsAndEmptyRates) {
  const auto r = run_convergence({8, 16, 32}, [](int) { return ErrorPair{0.0, 0.0}; });
  ASSERT_EQ(r.rows.size(), 3u);
  for (const auto& row : r.rows) {
    EXPECT_EQ(*row.l2_error, 0.0);
    EXPECT_FALSE(row.l2_rate);
    EXPECT_FALSE(row.linf_rate);
  }
}

TEST(Convergence, FailedRowDoesNotAbortStudy) {
  const auto r = run_convergence({8, 16, 32}, [](int m) {
    if (m == 16) throw SolverError("boom");
    return ErrorPair{1.0 / (m * m), 2.0 / (m * m)};
  });
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.rows[1].failure, "boom");
  EXPECT_FALSE(r.rows[1].l2_error);
  EXPECT_FALSE(r.rows[2].l2_rate);
  EXPECT_TRUE(r.rows[2].l2_error);
}

TEST(Convergence, MeshListMustDouble) {
  EXPECT_THROW(run_convergence({8, 12}, [](int) { return ErrorPair{}; }), InvalidArgument);
  EXPECT_THROW(run_convergence({2, 4}, [](int) { return ErrorPair{}; }), InvalidArgument);
}

TEST(Convergence, TableOneFinalRow) {
  StudyConfig s;
  s.problem = "example2_1";
  s.params.alpha = 1.9;
  s.m_list = {8, 16, 32, 64, 128};
  const auto r = run_convergence(s);
  EXPECT_NEAR(*r.rows.back().l2_error / 1.8352e-09, 1.0, 1e-3);
  EXPECT_NEAR(*r.rows.back().l2_rate, 3.9994, 1e-3);
}

TEST(Csv, EmptyReportIsHeaderOnly) {
  std::ostringstream os;
  emit_csv({}, os);
  EXPECT_EQ(os.str(), "m,h,l2_error,l2_rate,linf_error,linf_rate\n");
}

TEST(Csv, SingleRowHasEmptyRates) {
  std::ostringstream os;
  emit_csv(run_convergence({8}, [](int) { return ErrorPair{1.23456789e-4, 2.0}; }), os);
  const auto l = lines(os.str());
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[1], "8,1.25000e-01,1.23457e-04,,2.00000e+00,");
}

TEST(Csv, BlocksCarryMetadata) {
  std::ostringstream os;
  auto a = run_convergence({8}, [](int) { return ErrorPair{1, 1}; }, {{"problem", "x"}});
  emit_csv_blocks({a, a}, os);
  const auto l = lines(os.str());
  EXPECT_EQ(l[0], "# problem=x");
  EXPECT_EQ(l[1], "m,h,l2_error,l2_rate,linf_error,linf_rate");
  EXPECT_EQ(l[3], "");
  EXPECT_EQ(l[4], "# problem=x");
}

TEST(Csv, StudiesAreByteIdenticalAcrossRuns) {
  auto run = [] {
    std::vector<ConvergenceReport> reps;
    for (const auto& s : table_studies("1")) reps.push_back(run_convergence(s));
    std::ostringstream os;
    emit_csv_blocks(reps, os);
    return os.str();
  };
  EXPECT_EQ(run(), run());
}

TEST(Tables, Definitions) {
  for (const auto& t : table_names()) EXPECT_FALSE(table_studies(t).empty()) << t;
  EXPECT_THROW(table_studies("7"), InvalidArgument);
  EXPECT_EQ(table_studies("t6").front().m_list.back(), 64);
  EXPECT_EQ(table_studies("t6", true).front().m_list.back(), 128);
  EXPECT_EQ(table_studies("1").size(), 3u);
  EXPECT_EQ(table_studies("t4").size(), 6u);
}
