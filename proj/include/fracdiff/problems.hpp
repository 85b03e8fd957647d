#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fracdiff/evolution.hpp"
#include "fracdiff/steady.hpp"

namespace fracdiff {

enum class ProblemKind { steady1d, evolve1d, evolve2d };

/// Scalar parameters a problem may take. Unused slots are ignored by the factory.
struct ProblemParams {
  double alpha = 1.5;
  double beta = 1.5;
  double lambda = 0.0;
};

enum class TauRuleKind { h_squared, fixed_steps };

struct TauRule {
  TauRuleKind kind = TauRuleKind::h_squared;
  int n_steps = 0;  // fixed_steps only
  /// Number of steps on [0, t_end] for mesh width h.
  int steps(double t_end, double h) const;
};

struct ProblemSpec {
  std::string name;
  ProblemKind kind = ProblemKind::steady1d;
  std::string summary;
  ProblemParams defaults;
  bool uses_lambda = false;
  bool uses_beta = false;
  QuasiCompactOrder default_order = QuasiCompactOrder::fourth;

  std::function<SteadyProblem(const ProblemParams&, int m)> make_steady;
  std::function<Evolution1D(const ProblemParams&, int m, const TauRule&)> make_evolution_1d;
  std::function<Evolution2D(const ProblemParams&, int m, const TauRule&)> make_evolution_2d;
};

const std::vector<ProblemSpec>& problem_registry();

/// Throws InvalidArgument for an unknown name.
const ProblemSpec& find_problem(std::string_view name);

/// Gamma(a) / Gamma(b) through log-Gamma, for positive arguments.
double gamma_ratio(double a, double b);

/// Left Riemann-Liouville derivative of x^5 (1 - x)^5 on (0, 1). The right derivative at x
/// equals this evaluated at 1 - x.
double left_derivative_x5_1mx5(double alpha, double x);

/// Sum of the left and right derivatives of x^5 (1 - x)^5, shared by both directions of the
/// two-dimensional source.
double two_sided_derivative_x5_1mx5(double alpha, double x);

}  // namespace fracdiff
