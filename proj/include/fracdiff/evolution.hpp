#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fracdiff/grid.hpp"
#include "fracdiff/kernels.hpp"
#include "fracdiff/operators.hpp"

namespace fracdiff {

enum class MatvecBackend { dense, fft };

struct SolverOptions {
  Execution exec = Execution::parallel;
  /// fft applies the Toeplitz blocks through circulant embedding (1D Crank-Nicolson only).
  MatvecBackend backend = MatvecBackend::dense;
};

/// u_t = k1 D_left^{alpha,lambda} u + k2 D_right^{alpha,lambda} u + f on (a, b) x (0, T].
struct Evolution1D {
  Grid1D grid;
  double t_end = 1.0;
  int n_steps = 1;
  FracParams params;
  std::function<double(double, double)> source;  // f(x, t)
  std::function<double(double)> initial;         // u0(x)
  std::function<double(double)> phi_a;           // u(a, t)
  std::function<double(double)> phi_b;           // u(b, t)
  std::function<double(double, double)> exact;   // optional u(x, t)

  double tau() const { return t_end / n_steps; }
  void validate() const;
};

/// Boundary data should vanish on a side whose coefficient is nonzero. Violations are
/// reported here (sampled in time), not rejected.
std::vector<std::string> compatibility_warnings(const Evolution1D& problem);

/// Crank-Nicolson quasi-compact stepper. The left-hand matrix is factorized once.
class CrankNicolson1D {
 public:
  explicit CrankNicolson1D(const Evolution1D& problem, SolverOptions options = {});
  ~CrankNicolson1D();
  CrankNicolson1D(CrankNicolson1D&&) noexcept;
  CrankNicolson1D& operator=(CrankNicolson1D&&) noexcept;

  void step();
  void run();

  int step_index() const noexcept { return step_; }
  double time() const noexcept { return step_ * problem_.tau(); }
  const GridFunction1D& current() const noexcept { return u_; }

 private:
  struct FftPath;

  Evolution1D problem_;
  SolverOptions options_;
  DiscreteOperator1D op_;
  LineOperator rhs_op_;
  LineSolver lhs_;
  GridFunction1D u_;
  GridFunction1D f_;
  std::vector<double> next_;
  std::unique_ptr<FftPath> fft_;
  int step_ = 0;
};

GridFunction1D cn_solve_1d(const Evolution1D& problem, SolverOptions options = {});

/// u_t = k1x D_x^alpha + k2x D_x^alpha(right) + k1y D_y^beta + k2y D_y^beta(right) + f,
/// Dirichlet data on the boundary of the rectangle. Untempered.
struct Evolution2D {
  Grid2D grid;
  double t_end = 1.0;
  int n_steps = 1;
  FracOrder alpha{1.5};
  FracOrder beta{1.5};
  double k1x = 1.0;
  double k2x = 0.0;
  double k1y = 1.0;
  double k2y = 0.0;
  std::function<double(double, double, double)> source;    // f(x, y, t)
  std::function<double(double, double)> initial;           // u0(x, y)
  std::function<double(double, double, double)> boundary;  // phi(x, y, t)
  std::function<double(double, double, double)> exact;     // optional

  double tau() const { return t_end / n_steps; }
  void validate() const;
};

enum class AdiVariant { douglas, dyakonov };

/// Quasi-compact ADI stepper: an x-sweep of independent line solves with
/// (P_x - tau/2 delta_x) followed by a y-sweep with (P_y - tau/2 delta_y).
class AdiStepper2D {
 public:
  AdiStepper2D(const Evolution2D& problem, AdiVariant variant, SolverOptions options = {});

  void step();
  void run();

  int step_index() const noexcept { return step_; }
  double time() const noexcept { return step_ * problem_.tau(); }
  const GridFunction2D& current() const noexcept { return u_; }

 private:
  void source_term(double t_half);
  void star_boundary(double t_next);
  void douglas_rhs();
  void dyakonov_rhs();

  Evolution2D problem_;
  AdiVariant variant_;
  SolverOptions options_;
  DiscreteOperator1D opx_;
  DiscreteOperator1D opy_;
  LineOperator px_, py_;  // compact only
  LineOperator dx_, dy_;  // fractional only
  LineOperator rx_, ry_;  // P + tau/2 delta
  LineSolver lx_, ly_;    // P - tau/2 delta
  GridFunction2D u_;
  GridFunction2D star_;
  GridFunction2D next_;
  GridFunction2D f_, pf_, ppf_;
  GridFunction2D t1_, t2_, t3_;
  int step_ = 0;
};

GridFunction2D adi_solve_2d(const Evolution2D& problem, AdiVariant variant,
                            SolverOptions options = {});

}  // namespace fracdiff
