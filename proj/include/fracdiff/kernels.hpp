#pragma once

#include <cstddef>

#include "fracdiff/grid.hpp"
#include "fracdiff/operators.hpp"

namespace fracdiff {

/// serial is the reference path; parallel distributes independent lines over OpenMP threads.
/// Both produce bitwise-identical results because every line is computed by the same code.
enum class Execution { serial, parallel };

namespace kernels {

/// For s in [s_begin, s_end): out(1..Mx-1, s) = op(in(0..Mx, s)).
void apply_along_x(const LineOperator& op, const GridFunction2D& in, GridFunction2D& out,
                   std::size_t s_begin, std::size_t s_end, Execution exec);

/// For i in [i_begin, i_end): out(i, 1..My-1) = op(in(i, 0..My)).
void apply_along_y(const LineOperator& op, const GridFunction2D& in, GridFunction2D& out,
                   std::size_t i_begin, std::size_t i_end, Execution exec);

/// For s in [s_begin, s_end): solve along x. `field` holds Dirichlet data at i = 0, Mx and the
/// right-hand side in the interior; the interior is overwritten.
void solve_along_x(const LineSolver& solver, GridFunction2D& field, std::size_t s_begin,
                   std::size_t s_end, Execution exec);

/// For i in [i_begin, i_end): solve along y, same conventions as solve_along_x.
void solve_along_y(const LineSolver& solver, GridFunction2D& field, std::size_t i_begin,
                   std::size_t i_end, Execution exec);

/// Threads the parallel path will use.
int parallel_threads();

}  // namespace kernels
}  // namespace fracdiff
