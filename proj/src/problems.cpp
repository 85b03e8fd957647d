#include "fracdiff/problems.hpp"

#include <array>
#include <cmath>

#include "fracdiff/error.hpp"

namespace fracdiff {

int TauRule::steps(double t_end, double h) const {
  if (kind == TauRuleKind::fixed_steps) {
    if (n_steps < 1) throw InvalidArgument("fixed step count must be positive");
    return n_steps;
  }
  const double n = std::round(t_end / (h * h));
  if (!(n >= 1.0) || n > 1e9) throw InvalidArgument("tau = h^2 gives an unusable step count");
  return static_cast<int>(n);
}

double gamma_ratio(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw InvalidArgument("gamma_ratio needs positive arguments");
  return std::exp(std::lgamma(a) - std::lgamma(b));
}

double left_derivative_x5_1mx5(double alpha, double x) {
  static constexpr std::array<double, 6> c{1.0, -5.0, 10.0, -10.0, 5.0, -1.0};
  double sum = 0.0;
  for (int i = 0; i < 6; ++i) {
    sum += c[i] * gamma_ratio(6.0 + i, 6.0 + i - alpha) * std::pow(x, 5.0 + i - alpha);
  }
  return sum;
}

double two_sided_derivative_x5_1mx5(double alpha, double x) {
  return left_derivative_x5_1mx5(alpha, x) + left_derivative_x5_1mx5(alpha, 1.0 - x);
}

namespace {

double x5_1mx5(double x) {
  const double y = x * (1.0 - x);
  return y * y * y * y * y;
}

SteadyProblem steady_x6(const ProblemParams& p, int m, bool tempered) {
  const double a = p.alpha;
  const double lam = tempered ? p.lambda : 0.0;
  const double c = gamma_ratio(7.0, 7.0 - a);
  SteadyProblem prob{Grid1D(0.0, 1.0, m), FracParams{FracOrder(a), Tempering(lam), 1.0, 0.0},
                     nullptr, 0.0, std::exp(-lam), nullptr};
  prob.source = [=](double x) { return c * std::exp(-lam * x) * std::pow(x, 6.0 - a); };
  prob.exact = [=](double x) { return std::exp(-lam * x) * std::pow(x, 6); };
  return prob;
}

Evolution1D example6_1(const ProblemParams& p, int m, const TauRule& rule) {
  const double a = p.alpha, lam = p.lambda;
  const double c = gamma_ratio(7.0, 7.0 - a);
  const Grid1D g(0.0, 1.0, m);
  Evolution1D e{.grid = g,
                .t_end = 1.0,
                .n_steps = rule.steps(1.0, g.h()),
                .params = FracParams{FracOrder(a), Tempering(lam), 1.0, 0.0}};
  e.source = [=](double x, double t) {
    return -std::exp(-t - lam * x) * (std::pow(x, 6) + c * std::pow(x, 6.0 - a));
  };
  e.initial = [=](double x) { return std::exp(-lam * x) * std::pow(x, 6); };
  e.phi_a = [](double) { return 0.0; };
  e.phi_b = [=](double t) { return std::exp(-t - lam); };
  e.exact = [=](double x, double t) { return std::exp(-t - lam * x) * std::pow(x, 6); };
  return e;
}

Evolution1D example6_2(const ProblemParams& p, int m, const TauRule& rule) {
  const double a = p.alpha;
  const Grid1D g(0.0, 1.0, m);
  Evolution1D e{.grid = g,
                .t_end = 1.0,
                .n_steps = rule.steps(1.0, g.h()),
                .params = FracParams{FracOrder(a), Tempering(p.lambda), 1.0, 1.0}};
  e.source = [=](double x, double t) {
    return -std::exp(-t) * (x5_1mx5(x) + two_sided_derivative_x5_1mx5(a, x));
  };
  e.initial = [](double x) { return x5_1mx5(x); };
  e.phi_a = [](double) { return 0.0; };
  e.phi_b = [](double) { return 0.0; };
  e.exact = [](double x, double t) { return std::exp(-t) * x5_1mx5(x); };
  return e;
}

Evolution2D example6_3(const ProblemParams& p, int m, const TauRule& rule) {
  constexpr double scale = 1e6;
  const double a = p.alpha, b = p.beta;
  const Grid1D g(0.0, 1.0, m);
  Evolution2D e{.grid = Grid2D{g, g},
                .t_end = 1.0,
                .n_steps = rule.steps(1.0, g.h()),
                .alpha = FracOrder(a),
                .beta = FracOrder(b)};
  e.k1x = e.k2x = e.k1y = e.k2y = 1.0;
  e.source = [=](double x, double y, double t) {
    const double X = x5_1mx5(x), Y = x5_1mx5(y);
    return -scale * std::exp(-t) *
           (X * Y + two_sided_derivative_x5_1mx5(a, x) * Y + X * two_sided_derivative_x5_1mx5(b, y));
  };
  e.initial = [=](double x, double y) { return scale * x5_1mx5(x) * x5_1mx5(y); };
  e.boundary = [](double, double, double) { return 0.0; };
  e.exact = [=](double x, double y, double t) {
    return scale * std::exp(-t) * x5_1mx5(x) * x5_1mx5(y);
  };
  return e;
}

std::vector<ProblemSpec> build_registry() {
  std::vector<ProblemSpec> r;
  {
    ProblemSpec s{"example2_1", ProblemKind::steady1d,
                  "steady left-sided, u = x^6, fourth order"};
    s.make_steady = [](const ProblemParams& p, int m) { return steady_x6(p, m, false); };
    r.push_back(std::move(s));
  }
  {
    ProblemSpec s{"example2_4", ProblemKind::steady1d, "steady left-sided, u = x^6, fifth order"};
    s.default_order = QuasiCompactOrder::fifth;
    s.make_steady = [](const ProblemParams& p, int m) { return steady_x6(p, m, false); };
    r.push_back(std::move(s));
  }
  {
    ProblemSpec s{"example5_1", ProblemKind::steady1d,
                  "steady tempered, u = exp(-lambda x) x^6, fourth order"};
    s.defaults.lambda = 1.5;
    s.uses_lambda = true;
    s.make_steady = [](const ProblemParams& p, int m) { return steady_x6(p, m, true); };
    r.push_back(std::move(s));
  }
  {
    ProblemSpec s{"example5_4", ProblemKind::steady1d,
                  "steady tempered, u = exp(-lambda x) x^6, fifth order"};
    s.defaults.lambda = 1.5;
    s.uses_lambda = true;
    s.default_order = QuasiCompactOrder::fifth;
    s.make_steady = [](const ProblemParams& p, int m) { return steady_x6(p, m, true); };
    r.push_back(std::move(s));
  }
  {
    ProblemSpec s{"example6_1", ProblemKind::evolve1d,
                  "tempered left-sided diffusion, u = exp(-t - lambda x) x^6"};
    s.uses_lambda = true;
    s.make_evolution_1d = example6_1;
    r.push_back(std::move(s));
  }
  {
    ProblemSpec s{"example6_2", ProblemKind::evolve1d,
                  "two-sided diffusion, u = exp(-t) x^5 (1 - x)^5"};
    s.make_evolution_1d = example6_2;
    r.push_back(std::move(s));
  }
  {
    ProblemSpec s{"example6_3", ProblemKind::evolve2d,
                  "2D two-sided diffusion, u = 1e6 exp(-t) x^5 (1-x)^5 y^5 (1-y)^5"};
    s.uses_beta = true;
    s.make_evolution_2d = example6_3;
    r.push_back(std::move(s));
  }
  return r;
}

}  // namespace

const std::vector<ProblemSpec>& problem_registry() {
  static const std::vector<ProblemSpec> registry = build_registry();
  return registry;
}

const ProblemSpec& find_problem(std::string_view name) {
  for (const auto& p : problem_registry()) {
    if (p.name == name) return p;
  }
  throw InvalidArgument("unknown problem '" + std::string(name) + "'");
}

}  // namespace fracdiff
