#include "fracdiff/kernels.hpp"

#include <omp.h>

#include <vector>

#include "fracdiff/error.hpp"

namespace fracdiff::kernels {

namespace {

void check_op(std::size_t interior, std::size_t nodes) {
  if (interior + 2 != nodes) throw InvalidArgument("line operator does not match field size");
}

void apply_x_line(const LineOperator& op, const GridFunction2D& in, GridFunction2D& out,
                  std::size_t s, std::vector<double>& line, std::vector<double>& res) {
  const std::size_t nx = in.nx();
  for (std::size_t i = 0; i < nx; ++i) line[i] = in.at(i, s);
  op.apply(line, res);
  for (std::size_t i = 1; i + 1 < nx; ++i) out.at(i, s) = res[i - 1];
}

void apply_y_line(const LineOperator& op, const GridFunction2D& in, GridFunction2D& out,
                  std::size_t i, std::vector<double>& res) {
  const std::size_t ny = in.ny();
  const std::span<const double> line(in.values.data() + i * ny, ny);
  op.apply(line, res);
  for (std::size_t s = 1; s + 1 < ny; ++s) out.at(i, s) = res[s - 1];
}

void solve_x_line(const LineSolver& solver, GridFunction2D& field, std::size_t s,
                  std::vector<double>& line) {
  const std::size_t nx = field.nx();
  for (std::size_t i = 0; i < nx; ++i) line[i] = field.at(i, s);
  solver.solve(line);
  for (std::size_t i = 1; i + 1 < nx; ++i) field.at(i, s) = line[i];
}

}  // namespace

void apply_along_x(const LineOperator& op, const GridFunction2D& in, GridFunction2D& out,
                   std::size_t s_begin, std::size_t s_end, Execution exec) {
  check_op(op.interior_size(), in.nx());
  if (!(in.grid == out.grid)) throw InvalidArgument("apply_along_x: field grids differ");
  const auto n = static_cast<long>(s_end) - static_cast<long>(s_begin);
  if (exec == Execution::serial) {
    std::vector<double> line(in.nx()), res(op.interior_size());
    for (std::size_t s = s_begin; s < s_end; ++s) apply_x_line(op, in, out, s, line, res);
    return;
  }
#pragma omp parallel
  {
    std::vector<double> line(in.nx()), res(op.interior_size());
#pragma omp for schedule(static)
    for (long k = 0; k < n; ++k) apply_x_line(op, in, out, s_begin + k, line, res);
  }
}

void apply_along_y(const LineOperator& op, const GridFunction2D& in, GridFunction2D& out,
                   std::size_t i_begin, std::size_t i_end, Execution exec) {
  check_op(op.interior_size(), in.ny());
  if (!(in.grid == out.grid)) throw InvalidArgument("apply_along_y: field grids differ");
  const auto n = static_cast<long>(i_end) - static_cast<long>(i_begin);
  if (exec == Execution::serial) {
    std::vector<double> res(op.interior_size());
    for (std::size_t i = i_begin; i < i_end; ++i) apply_y_line(op, in, out, i, res);
    return;
  }
#pragma omp parallel
  {
    std::vector<double> res(op.interior_size());
#pragma omp for schedule(static)
    for (long k = 0; k < n; ++k) apply_y_line(op, in, out, i_begin + k, res);
  }
}

void solve_along_x(const LineSolver& solver, GridFunction2D& field, std::size_t s_begin,
                   std::size_t s_end, Execution exec) {
  check_op(solver.op().interior_size(), field.nx());
  const auto n = static_cast<long>(s_end) - static_cast<long>(s_begin);
  if (exec == Execution::serial) {
    std::vector<double> line(field.nx());
    for (std::size_t s = s_begin; s < s_end; ++s) solve_x_line(solver, field, s, line);
    return;
  }
#pragma omp parallel
  {
    std::vector<double> line(field.nx());
#pragma omp for schedule(static)
    for (long k = 0; k < n; ++k) solve_x_line(solver, field, s_begin + k, line);
  }
}

void solve_along_y(const LineSolver& solver, GridFunction2D& field, std::size_t i_begin,
                   std::size_t i_end, Execution exec) {
  check_op(solver.op().interior_size(), field.ny());
  const std::size_t ny = field.ny();
  const auto n = static_cast<long>(i_end) - static_cast<long>(i_begin);
  if (exec == Execution::serial) {
    for (std::size_t i = i_begin; i < i_end; ++i) {
      solver.solve(std::span<double>(field.values.data() + i * ny, ny));
    }
    return;
  }
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) {
    solver.solve(std::span<double>(field.values.data() + (i_begin + k) * ny, ny));
  }
}

int parallel_threads() { return omp_get_max_threads(); }

}  // namespace fracdiff::kernels
