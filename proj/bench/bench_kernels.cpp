// Serial vs OpenMP line sweeps. Args: grid size m.

#include <benchmark/benchmark.h>

#include <random>

#include "fracdiff/kernels.hpp"
#include "fracdiff/problems.hpp"

using namespace fracdiff;

namespace {

struct Fixture {
  Grid2D grid;
  DiscreteOperator1D op;
  LineOperator apply_op;
  LineSolver solver;
  GridFunction2D in, out;

  explicit Fixture(int m)
      : grid{Grid1D(0, 1, m), Grid1D(0, 1, m)},
        op(FracParams{FracOrder(1.5), Tempering(), 1.0, 1.0}, grid.x),
        apply_op(op, 1.0, 0.5 / (m * m)),
        solver(LineOperator(op, 1.0, -0.5 / (m * m))),
        in(grid),
        out(grid) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (double& v : in.values) v = d(rng);
  }
};

Execution exec_of(const benchmark::State& state) {
  return state.range(1) ? Execution::parallel : Execution::serial;
}

void BM_ApplyAlongX(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  const auto exec = exec_of(state);
  for (auto _ : state) {
    kernels::apply_along_x(f.apply_op, f.in, f.out, 1, f.in.ny() - 1, exec);
    benchmark::DoNotOptimize(f.out.values.data());
  }
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_SolveAlongY(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  const auto exec = exec_of(state);
  for (auto _ : state) {
    state.PauseTiming();
    f.out = f.in;
    state.ResumeTiming();
    kernels::solve_along_y(f.solver, f.out, 1, f.out.nx() - 1, exec);
    benchmark::DoNotOptimize(f.out.values.data());
  }
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_AdiStep(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto problem = find_problem("example6_3").make_evolution_2d(ProblemParams{1.5, 1.9, 0.0}, m, {});
  AdiStepper2D stepper(problem, AdiVariant::douglas, SolverOptions{.exec = exec_of(state)});
  for (auto _ : state) {
    if (stepper.step_index() == problem.n_steps) {
      state.PauseTiming();
      stepper = AdiStepper2D(problem, AdiVariant::douglas, SolverOptions{.exec = exec_of(state)});
      state.ResumeTiming();
    }
    stepper.step();
  }
  state.SetLabel(state.range(1) ? "parallel" : "serial");
  state.counters["threads"] = state.range(1) ? kernels::parallel_threads() : 1;
}

}  // namespace

BENCHMARK(BM_ApplyAlongX)->ArgsProduct({{64, 256, 512}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SolveAlongY)->ArgsProduct({{64, 256, 512}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_AdiStep)->ArgsProduct({{32, 64, 128}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
