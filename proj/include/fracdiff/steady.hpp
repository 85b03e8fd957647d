#pragma once

#include <functional>

#include "fracdiff/coeffs.hpp"
#include "fracdiff/grid.hpp"
#include "fracdiff/operators.hpp"

namespace fracdiff {

/// k1 * D_left^{alpha,lambda} u + k2 * D_right^{alpha,lambda} u = f on (a, b),
/// u(a) = ua, u(b) = ub.
struct SteadyProblem {
  Grid1D grid;
  FracParams params;
  std::function<double(double)> source;
  double ua = 0.0;
  double ub = 0.0;
  std::function<double(double)> exact;  // optional
};

/// Solves (1/h^alpha)(k1 A + k2 A^T) u = P f with the boundary columns moved to the
/// right-hand side, by one dense LU. The fifth-order path is for steady problems only.
GridFunction1D solve_steady(const SteadyProblem& problem,
                            QuasiCompactOrder order = QuasiCompactOrder::fourth);

}  // namespace fracdiff
