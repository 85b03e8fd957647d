#include "fracdiff/steady.hpp"

#include "fracdiff/error.hpp"

namespace fracdiff {

GridFunction1D solve_steady(const SteadyProblem& problem, QuasiCompactOrder order) {
  problem.params.alpha.require_open();
  problem.params.validate();
  if (!problem.source) throw InvalidArgument("steady problem has no source term");

  const Grid1D& grid = problem.grid;
  const DiscreteOperator1D op(problem.params, grid, order);
  const auto f = GridFunction1D::sample(grid, problem.source);

  GridFunction1D u(grid);
  u[0] = problem.ua;
  u[grid.m()] = problem.ub;
  for (int j = 1; j < grid.m(); ++j) u[j] = op.compact(f, j);

  const LineSolver solver(LineOperator(op, 0.0, 1.0));
  solver.solve(u.values);
  return u;
}

}  // namespace fracdiff
