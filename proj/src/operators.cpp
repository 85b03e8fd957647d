#include "fracdiff/operators.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fracdiff/error.hpp"

namespace fracdiff {

void FracParams::validate() const {
  if (!std::isfinite(k1) || !std::isfinite(k2) || k1 < 0.0 || k2 < 0.0) {
    throw InvalidArgument("diffusion coefficients must be finite and non-negative");
  }
  if (k1 == 0.0 && k2 == 0.0) {
    throw InvalidArgument("at least one diffusion coefficient must be nonzero");
  }
}

CompactKind compact_kind(QuasiCompactOrder order, Tempering lambda) {
  if (order == QuasiCompactOrder::fourth) {
    return lambda.is_zero() ? CompactKind::p4 : CompactKind::p4_tempered;
  }
  return lambda.is_zero() ? CompactKind::p5 : CompactKind::p5_tempered;
}

CompactStencil compact_stencil(CompactKind kind, FracOrder alpha, Tempering lambda, double h,
                               Side side) {
  CompactStencil s;
  const double lh = lambda.value() * h;
  switch (kind) {
    case CompactKind::p4:
    case CompactKind::p4_tempered: {
      const double b2 = qc4_coeffs(alpha).b2;
      s = {b2, 1.0 - 2.0 * b2, b2};
      break;
    }
    case CompactKind::p5:
    case CompactKind::p5_tempered: {
      const auto c = qc5_coeffs(alpha);
      s = {c.gamma1, 1.0, c.gamma2};
      break;
    }
  }
  if (kind == CompactKind::p4_tempered || kind == CompactKind::p5_tempered) {
    s.lower *= std::exp(-lh);
    s.upper *= std::exp(lh);
  }
  const CompactStencil mirrored{s.upper, s.diag, s.lower};
  switch (side) {
    case Side::left:
      return s;
    case Side::right:
      return mirrored;
    case Side::both:
      if (s.lower != s.upper) {
        throw InvalidArgument(
            "two-sided operator has no common compact stencil for this order/tempering");
      }
      return s;
  }
  return s;
}

double apply_left_frac(const FusedWeights& w, const GridFunction1D& u, int j) {
  const int m = u.grid.m();
  if (j < 1 || j > m - 1) throw InvalidArgument("interior index out of range: " + std::to_string(j));
  if (w.w.size() < static_cast<std::size_t>(j) + 2) throw InvalidArgument("too few fused weights");
  double acc = 0.0;
  for (int k = 0; k <= j + 1; ++k) acc += w.w[k] * u.values[j - k + 1];
  return acc / std::pow(w.h, w.alpha.value());
}

double apply_right_frac(const FusedWeights& w, const GridFunction1D& u, int j) {
  const int m = u.grid.m();
  if (j < 1 || j > m - 1) throw InvalidArgument("interior index out of range: " + std::to_string(j));
  if (w.w.size() < static_cast<std::size_t>(m - j) + 2) throw InvalidArgument("too few fused weights");
  double acc = 0.0;
  for (int k = 0; k <= m - j + 1; ++k) acc += w.w[k] * u.values[j + k - 1];
  return acc / std::pow(w.h, w.alpha.value());
}

double apply_compact(const CompactStencil& p, const GridFunction1D& f, int j) {
  if (j < 1 || j > f.grid.m() - 1) {
    throw InvalidArgument("interior index out of range: " + std::to_string(j));
  }
  return p.apply(f.values, static_cast<std::size_t>(j));
}

namespace {

Side compact_side(const FracParams& p) {
  if (p.k2 == 0.0) return Side::left;
  if (p.k1 == 0.0) return Side::right;
  return Side::both;
}

DenseMatrix hessenberg_toeplitz(const std::vector<double>& w, std::size_t n) {
  DenseMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t cmax = std::min(r + 1, n - 1);
    for (std::size_t c = 0; c <= cmax; ++c) a(r, c) = w[r - c + 1];
  }
  return a;
}

}  // namespace

OperatorMatrices assemble_matrices(const FracParams& params, const Grid1D& grid, Side side,
                                   QuasiCompactOrder order) {
  params.validate();
  const auto n = grid.interior_count();
  const auto fw = fused_weights(params.alpha, params.lambda, grid.h(),
                                static_cast<std::size_t>(grid.m()), order);
  const DenseMatrix left = hessenberg_toeplitz(fw.w, n);

  OperatorMatrices out{DenseMatrix{}, Tridiagonal{}, params, grid.h(), side, order};
  switch (side) {
    case Side::left:
      out.a = left;
      break;
    case Side::right:
      out.a = left.transposed();
      break;
    case Side::both:
      out.a = DenseMatrix(n, n);
      out.a.add_scaled(left, params.k1).add_scaled(left.transposed(), params.k2);
      break;
  }
  const auto st = compact_stencil(compact_kind(order, params.lambda), params.alpha, params.lambda,
                                  grid.h(), side == Side::both ? compact_side(params) : side);
  out.p = Tridiagonal(n, st.lower, st.diag, st.upper);
  return out;
}

DiscreteOperator1D::DiscreteOperator1D(const FracParams& params, const Grid1D& grid,
                                       QuasiCompactOrder order)
    : params_(params),
      grid_(grid),
      order_(order),
      weights_(fused_weights(params.alpha, params.lambda, grid.h(),
                             static_cast<std::size_t>(grid.m()), order)),
      inv_h_alpha_(1.0 / std::pow(grid.h(), params.alpha.value())) {
  params_.validate();
  stencil_ = compact_stencil(compact_kind(order, params.lambda), params.alpha, params.lambda,
                             grid.h(), compact_side(params));
}

double DiscreteOperator1D::frac(const GridFunction1D& u, int j) const {
  double acc = 0.0;
  if (params_.k1 != 0.0) acc += params_.k1 * apply_left_frac(weights_, u, j);
  if (params_.k2 != 0.0) acc += params_.k2 * apply_right_frac(weights_, u, j);
  return acc;
}

double DiscreteOperator1D::compact(const GridFunction1D& f, int j) const {
  return apply_compact(stencil_, f, j);
}

LineOperator::LineOperator(const DiscreteOperator1D& op, double compact_scale, double frac_scale)
    : n_(op.grid().interior_count()),
      p_(op.stencil().scaled(compact_scale)),
      frac_scale_(frac_scale * op.inv_h_alpha()),
      first_col_(n_, 0.0),
      last_col_(n_, 0.0) {
  const auto& w = op.weights().w;
  const double k1 = op.params().k1;
  const double k2 = op.params().k2;
  const std::size_t m = n_ + 1;
  if (frac_scale != 0.0) {
    frac_ = DenseMatrix(n_, n_);
    const DenseMatrix left = hessenberg_toeplitz(w, n_);
    if (k1 != 0.0) frac_.add_scaled(left, k1 * frac_scale_);
    if (k2 != 0.0) frac_.add_scaled(left.transposed(), k2 * frac_scale_);
    for (std::size_t r = 0; r < n_; ++r) {
      // row r is node j = r + 1: left sum meets u_0 at k = j + 1, right sum meets u_M at k = M - j + 1
      first_col_[r] = frac_scale_ * k1 * w[r + 2];
      last_col_[r] = frac_scale_ * k2 * w[m - r];
    }
    first_col_[0] += frac_scale_ * k2 * w[0];
    last_col_[n_ - 1] += frac_scale_ * k1 * w[0];
  }
  first_col_[0] += p_.lower;
  last_col_[n_ - 1] += p_.upper;
}

void LineOperator::apply_stencil_and_boundary(std::span<const double> line,
                                              std::span<double> out) const {
  if (line.size() != n_ + 2 || out.size() != n_) throw InvalidArgument("line operator size mismatch");
  const double u0 = line[0];
  const double um = line[n_ + 1];
  for (std::size_t r = 0; r < n_; ++r) {
    double acc = p_.diag * line[r + 1];
    if (r > 0) acc += p_.lower * line[r];
    if (r + 1 < n_) acc += p_.upper * line[r + 2];
    out[r] = acc + first_col_[r] * u0 + last_col_[r] * um;
  }
}

void LineOperator::apply(std::span<const double> line, std::span<double> out) const {
  apply_stencil_and_boundary(line, out);
  if (frac_.empty()) return;
  const double* x = line.data() + 1;
  for (std::size_t r = 0; r < n_; ++r) {
    const auto row = frac_.row(r);
    double acc = 0.0;
    for (std::size_t c = 0; c < n_; ++c) acc += row[c] * x[c];
    out[r] += acc;
  }
}

void LineOperator::accumulate_boundary(double u0, double um, double sign,
                                       std::span<double> out) const {
  if (out.size() != n_) throw InvalidArgument("line operator size mismatch");
  for (std::size_t r = 0; r < n_; ++r) out[r] += sign * (first_col_[r] * u0 + last_col_[r] * um);
}

DenseMatrix LineOperator::interior_matrix() const {
  DenseMatrix out = frac_.empty() ? DenseMatrix(n_, n_) : frac_;
  for (std::size_t r = 0; r < n_; ++r) {
    out(r, r) += p_.diag;
    if (r > 0) out(r, r - 1) += p_.lower;
    if (r + 1 < n_) out(r, r + 1) += p_.upper;
  }
  return out;
}

LineSolver::LineSolver(LineOperator op) : op_(std::move(op)), lu_(op_.interior_matrix()) {}

void LineSolver::solve(std::span<double> line) const {
  const std::size_t n = op_.interior_size();
  if (line.size() != n + 2) throw InvalidArgument("line solver size mismatch");
  auto interior = line.subspan(1, n);
  op_.accumulate_boundary(line[0], line[n + 1], -1.0, interior);
  lu_.solve_in_place(interior);
}

std::vector<double> boundary_vector(const FracParams& params, const Grid1D& grid, double tau,
                                    const BoundaryLevels& levels, QuasiCompactOrder order) {
  if (!(tau > 0.0)) throw InvalidArgument("time step must be positive");
  const DiscreteOperator1D op(params, grid, order);
  const LineOperator rhs_op(op, 1.0, 0.5 * tau);
  const LineOperator lhs_op(op, 1.0, -0.5 * tau);
  std::vector<double> h(grid.interior_count(), 0.0);
  rhs_op.accumulate_boundary(levels.u0_old, levels.um_old, 1.0, h);
  lhs_op.accumulate_boundary(levels.u0_new, levels.um_new, -1.0, h);
  return h;
}

}  // namespace fracdiff
