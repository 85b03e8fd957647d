#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracdiff/coeffs.hpp"
#include "fracdiff/grid.hpp"
#include "fracdiff/linalg.hpp"

namespace fracdiff {

/// Order, tempering and the left/right diffusion coefficients of one fractional term.
struct FracParams {
  FracOrder alpha;
  Tempering lambda{};
  double k1 = 1.0;
  double k2 = 0.0;

  /// Throws InvalidArgument unless k1, k2 >= 0 and not both zero.
  void validate() const;
};

enum class Side { left, right, both };

enum class CompactKind { p4, p4_tempered, p5, p5_tempered };

/// Three-point compact operator: lower * f[j-1] + diag * f[j] + upper * f[j+1].
struct CompactStencil {
  double lower = 0.0;
  double diag = 1.0;
  double upper = 0.0;

  double apply(std::span<const double> f, std::size_t j) const {
    return lower * f[j - 1] + diag * f[j] + upper * f[j + 1];
  }
  CompactStencil scaled(double s) const { return {lower * s, diag * s, upper * s}; }
};

/// Stencil for the given kind. For the right-sided derivative the stencil is mirrored.
/// Untempered kinds ignore lambda.
CompactStencil compact_stencil(CompactKind kind, FracOrder alpha, Tempering lambda, double h,
                               Side side = Side::left);

CompactKind compact_kind(QuasiCompactOrder order, Tempering lambda);

/// (1/h^alpha) * sum_{k=0}^{j+1} w[k] u[j-k+1], for 1 <= j <= M-1.
double apply_left_frac(const FusedWeights& w, const GridFunction1D& u, int j);
/// (1/h^alpha) * sum_{k=0}^{M-j+1} w[k] u[j+k-1], for 1 <= j <= M-1.
double apply_right_frac(const FusedWeights& w, const GridFunction1D& u, int j);
double apply_compact(const CompactStencil& p, const GridFunction1D& f, int j);

/// Interior (M-1)x(M-1) matrices. `a` is dimensionless (no 1/h^alpha):
/// left -> A, right -> A^T, both -> k1 A + k2 A^T.
struct OperatorMatrices {
  DenseMatrix a;
  Tridiagonal p;
  FracParams params;
  double h = 0.0;
  Side side = Side::left;
  QuasiCompactOrder order = QuasiCompactOrder::fourth;
};

OperatorMatrices assemble_matrices(const FracParams& params, const Grid1D& grid, Side side,
                                   QuasiCompactOrder order = QuasiCompactOrder::fourth);

struct BoundaryLevels {
  double u0_old = 0.0;
  double u0_new = 0.0;
  double um_old = 0.0;
  double um_new = 0.0;
};

/// Boundary vector of the Crank-Nicolson system (P - B) U^{n+1} = (P + B) U^n + tau F + H:
/// every term involving u_0 and u_M at both time levels.
std::vector<double> boundary_vector(const FracParams& params, const Grid1D& grid, double tau,
                                    const BoundaryLevels& levels,
                                    QuasiCompactOrder order = QuasiCompactOrder::fourth);

/// Weights and compact stencil for one (params, grid, order), computed once and shared.
/// The compact operator must pair with the fractional operator: two-sided problems are
/// accepted only where the left and right stencils coincide (untempered, fourth order).
class DiscreteOperator1D {
 public:
  DiscreteOperator1D(const FracParams& params, const Grid1D& grid,
                     QuasiCompactOrder order = QuasiCompactOrder::fourth);

  const FracParams& params() const noexcept { return params_; }
  const Grid1D& grid() const noexcept { return grid_; }
  QuasiCompactOrder order() const noexcept { return order_; }
  const FusedWeights& weights() const noexcept { return weights_; }
  const CompactStencil& stencil() const noexcept { return stencil_; }
  double inv_h_alpha() const noexcept { return inv_h_alpha_; }

  /// k1 * left + k2 * right, including 1/h^alpha.
  double frac(const GridFunction1D& u, int j) const;
  double compact(const GridFunction1D& f, int j) const;

 private:
  FracParams params_;
  Grid1D grid_;
  QuasiCompactOrder order_;
  FusedWeights weights_;
  CompactStencil stencil_;
  double inv_h_alpha_;
};

/// Affine line operator c_p * P + c_d * delta, where delta = (k1 L + k2 R) / h^alpha.
/// Acts on a full line (M+1 values including boundary nodes) and produces the M-1
/// interior values.
class LineOperator {
 public:
  LineOperator(const DiscreteOperator1D& op, double compact_scale, double frac_scale);

  std::size_t interior_size() const noexcept { return n_; }

  void apply(std::span<const double> line, std::span<double> out) const;
  /// Everything except the interior-interior fractional block.
  void apply_stencil_and_boundary(std::span<const double> line, std::span<double> out) const;
  /// out += sign * (contribution of the boundary values u0, um).
  void accumulate_boundary(double u0, double um, double sign, std::span<double> out) const;

  /// Dense interior matrix c_p P + c_d delta (boundary columns dropped).
  DenseMatrix interior_matrix() const;
  const DenseMatrix& interior_frac() const noexcept { return frac_; }
  /// c_d / h^alpha; the interior fractional block equals this times (k1 A + k2 A^T).
  double frac_scale() const noexcept { return frac_scale_; }

 private:
  std::size_t n_;
  CompactStencil p_;
  double frac_scale_;
  DenseMatrix frac_;
  std::vector<double> first_col_;
  std::vector<double> last_col_;
};

/// Factorized LineOperator: solves op(u) = rhs for the interior of u given its boundary values.
class LineSolver {
 public:
  explicit LineSolver(LineOperator op);

  const LineOperator& op() const noexcept { return op_; }
  /// `line` holds Dirichlet data at both ends and the right-hand side in its interior;
  /// the interior is overwritten with the solution.
  void solve(std::span<double> line) const;

 private:
  LineOperator op_;
  DenseLU lu_;
};

}  // namespace fracdiff
