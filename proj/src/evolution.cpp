#include "fracdiff/evolution.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "fracdiff/error.hpp"
#include "fracdiff/toeplitz_fft.hpp"

namespace fracdiff {

void Evolution1D::validate() const {
  params.alpha.require_open();
  params.validate();
  if (n_steps < 1) throw InvalidArgument("evolution needs at least one time step");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw InvalidArgument("final time must be positive");
  if (!source || !initial || !phi_a || !phi_b) {
    throw InvalidArgument("evolution problem needs source, initial and boundary functions");
  }
}

std::vector<std::string> compatibility_warnings(const Evolution1D& problem) {
  std::vector<std::string> out;
  constexpr int samples = 5;
  for (int k = 0; k < samples; ++k) {
    const double t = problem.t_end * k / (samples - 1);
    if (problem.params.k1 != 0.0 && std::abs(problem.phi_a(t)) > 1e-14) {
      std::ostringstream os;
      os << "k1 != 0 but left boundary value is " << problem.phi_a(t) << " at t = " << t;
      out.push_back(os.str());
      break;
    }
  }
  for (int k = 0; k < samples; ++k) {
    const double t = problem.t_end * k / (samples - 1);
    if (problem.params.k2 != 0.0 && std::abs(problem.phi_b(t)) > 1e-14) {
      std::ostringstream os;
      os << "k2 != 0 but right boundary value is " << problem.phi_b(t) << " at t = " << t;
      out.push_back(os.str());
      break;
    }
  }
  return out;
}

struct CrankNicolson1D::FftPath {
  ToeplitzFft left;
  ToeplitzFft right;
  std::vector<double> tmp;

  FftPath(const std::vector<double>& w, std::size_t n)
      : left(w, n, false), right(w, n, true), tmp(n) {}
};

namespace {

const Evolution1D& validated(const Evolution1D& p) {
  p.validate();
  return p;
}

const Evolution2D& validated(const Evolution2D& p) {
  p.validate();
  return p;
}

}  // namespace

CrankNicolson1D::CrankNicolson1D(const Evolution1D& problem, SolverOptions options)
    : problem_(validated(problem)),
      options_(options),
      op_(problem.params, problem.grid),
      rhs_op_(op_, 1.0, 0.5 * problem.tau()),
      lhs_(LineOperator(op_, 1.0, -0.5 * problem.tau())),
      u_(GridFunction1D::sample(problem.grid, problem.initial)),
      f_(problem.grid),
      next_(problem.grid.node_count()) {
  u_[0] = problem_.phi_a(0.0);
  u_[problem_.grid.m()] = problem_.phi_b(0.0);
  if (options_.backend == MatvecBackend::fft) {
    fft_ = std::make_unique<FftPath>(op_.weights().w, problem_.grid.interior_count());
  }
}

CrankNicolson1D::~CrankNicolson1D() = default;
CrankNicolson1D::CrankNicolson1D(CrankNicolson1D&&) noexcept = default;
CrankNicolson1D& CrankNicolson1D::operator=(CrankNicolson1D&&) noexcept = default;

void CrankNicolson1D::step() {
  const double tau = problem_.tau();
  const double t_next = (step_ + 1) * tau;
  const double t_half = step_ * tau + 0.5 * tau;
  const Grid1D& grid = problem_.grid;
  const int m = grid.m();
  const std::size_t n = grid.interior_count();

  for (int j = 0; j <= m; ++j) f_[j] = problem_.source(grid.x(j), t_half);

  auto interior = std::span<double>(next_).subspan(1, n);
  if (fft_) {
    rhs_op_.apply_stencil_and_boundary(u_.values, interior);
    const auto x = u_.interior();
    const double k1 = op_.params().k1, k2 = op_.params().k2;
    if (k1 != 0.0) {
      fft_->left.multiply(x, fft_->tmp);
      for (std::size_t r = 0; r < n; ++r) interior[r] += rhs_op_.frac_scale() * k1 * fft_->tmp[r];
    }
    if (k2 != 0.0) {
      fft_->right.multiply(x, fft_->tmp);
      for (std::size_t r = 0; r < n; ++r) interior[r] += rhs_op_.frac_scale() * k2 * fft_->tmp[r];
    }
  } else {
    rhs_op_.apply(u_.values, interior);
  }
  for (int j = 1; j < m; ++j) next_[j] += tau * op_.compact(f_, j);
  next_[0] = problem_.phi_a(t_next);
  next_[m] = problem_.phi_b(t_next);

  lhs_.solve(next_);
  std::swap(u_.values, next_);
  ++step_;
}

void CrankNicolson1D::run() {
  while (step_ < problem_.n_steps) step();
}

GridFunction1D cn_solve_1d(const Evolution1D& problem, SolverOptions options) {
  CrankNicolson1D stepper(problem, options);
  stepper.run();
  return stepper.current();
}

void Evolution2D::validate() const {
  alpha.require_open();
  beta.require_open();
  FracParams{alpha, {}, k1x, k2x}.validate();
  FracParams{beta, {}, k1y, k2y}.validate();
  if (n_steps < 1) throw InvalidArgument("evolution needs at least one time step");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw InvalidArgument("final time must be positive");
  if (!source || !initial || !boundary) {
    throw InvalidArgument("2D problem needs source, initial and boundary functions");
  }
}

AdiStepper2D::AdiStepper2D(const Evolution2D& problem, AdiVariant variant, SolverOptions options)
    : problem_(validated(problem)),
      variant_(variant),
      options_(options),
      opx_(FracParams{problem.alpha, {}, problem.k1x, problem.k2x}, problem.grid.x),
      opy_(FracParams{problem.beta, {}, problem.k1y, problem.k2y}, problem.grid.y),
      px_(opx_, 1.0, 0.0),
      py_(opy_, 1.0, 0.0),
      dx_(opx_, 0.0, 1.0),
      dy_(opy_, 0.0, 1.0),
      rx_(opx_, 1.0, 0.5 * problem.tau()),
      ry_(opy_, 1.0, 0.5 * problem.tau()),
      lx_(LineOperator(opx_, 1.0, -0.5 * problem.tau())),
      ly_(LineOperator(opy_, 1.0, -0.5 * problem.tau())),
      u_(problem.grid),
      star_(problem.grid),
      next_(problem.grid),
      f_(problem.grid),
      pf_(problem.grid),
      ppf_(problem.grid),
      t1_(problem.grid),
      t2_(problem.grid),
      t3_(problem.grid) {
  const auto& g = problem_.grid;
  for (int i = 0; i <= g.x.m(); ++i) {
    for (int s = 0; s <= g.y.m(); ++s) {
      const bool edge = i == 0 || s == 0 || i == g.x.m() || s == g.y.m();
      u_.at(i, s) = edge ? problem_.boundary(g.x.x(i), g.y.x(s), 0.0)
                         : problem_.initial(g.x.x(i), g.y.x(s));
    }
  }
}

namespace {

void add_interior(GridFunction2D& dst, const GridFunction2D& src, double scale) {
  const std::size_t nx = dst.nx(), ny = dst.ny();
  for (std::size_t i = 1; i + 1 < nx; ++i) {
    for (std::size_t s = 1; s + 1 < ny; ++s) dst.at(i, s) += scale * src.at(i, s);
  }
}

}  // namespace

void AdiStepper2D::source_term(double t_half) {
  const auto& g = problem_.grid;
  for (int i = 0; i <= g.x.m(); ++i) {
    for (int s = 0; s <= g.y.m(); ++s) f_.at(i, s) = problem_.source(g.x.x(i), g.y.x(s), t_half);
  }
  kernels::apply_along_y(py_, f_, pf_, 0, f_.nx(), options_.exec);
  kernels::apply_along_x(px_, pf_, ppf_, 1, f_.ny() - 1, options_.exec);
}

void AdiStepper2D::douglas_rhs() {
  const double tau = problem_.tau();
  const std::size_t nx = u_.nx(), ny = u_.ny();
  const auto exec = options_.exec;

  star_.values.assign(star_.values.size(), 0.0);
  add_interior(star_, ppf_, tau);

  kernels::apply_along_x(dx_, u_, t1_, 0, ny, exec);  // delta_x U
  kernels::apply_along_y(py_, t1_, t2_, 1, nx - 1, exec);
  add_interior(star_, t2_, 0.5 * tau);

  kernels::apply_along_y(py_, u_, t1_, 0, nx, exec);  // P_y U
  kernels::apply_along_x(px_, t1_, t2_, 1, ny - 1, exec);
  add_interior(star_, t2_, 1.0);

  kernels::apply_along_y(dy_, u_, t3_, 0, nx, exec);  // delta_y U, reused by the second stage
  kernels::apply_along_x(px_, t3_, t2_, 1, ny - 1, exec);
  add_interior(star_, t2_, tau);
}

void AdiStepper2D::dyakonov_rhs() {
  const double tau = problem_.tau();
  const std::size_t nx = u_.nx(), ny = u_.ny();
  kernels::apply_along_y(ry_, u_, t1_, 0, nx, options_.exec);
  kernels::apply_along_x(rx_, t1_, t2_, 1, ny - 1, options_.exec);
  star_.values.assign(star_.values.size(), 0.0);
  add_interior(star_, t2_, 1.0);
  add_interior(star_, ppf_, tau);
}

void AdiStepper2D::star_boundary(double t_next) {
  // Intermediate values on x = a and x = b follow from the second-stage relation applied to
  // the boundary data at the new level.
  const auto& g = problem_.grid;
  const std::size_t ny = u_.ny();
  std::vector<double> line(ny), out(ny - 2);
  for (const int i : {0, g.x.m()}) {
    for (std::size_t s = 0; s < ny; ++s) line[s] = problem_.boundary(g.x.x(i), g.y.x(s), t_next);
    ly_.op().apply(line, out);
    for (std::size_t s = 1; s + 1 < ny; ++s) {
      double v = out[s - 1];
      if (variant_ == AdiVariant::douglas) v += 0.5 * problem_.tau() * t3_.at(i, s);
      star_.at(i, s) = v;
    }
  }
}

void AdiStepper2D::step() {
  const double tau = problem_.tau();
  const double t_next = (step_ + 1) * tau;
  const auto& g = problem_.grid;
  const std::size_t nx = u_.nx(), ny = u_.ny();

  source_term(step_ * tau + 0.5 * tau);
  if (variant_ == AdiVariant::douglas) {
    douglas_rhs();
  } else {
    dyakonov_rhs();
  }
  star_boundary(t_next);
  kernels::solve_along_x(lx_, star_, 1, ny - 1, options_.exec);

  for (int i = 0; i <= g.x.m(); ++i) {
    for (int s = 0; s <= g.y.m(); ++s) {
      const bool edge = i == 0 || s == 0 || i == g.x.m() || s == g.y.m();
      if (edge) {
        next_.at(i, s) = problem_.boundary(g.x.x(i), g.y.x(s), t_next);
      } else {
        next_.at(i, s) = star_.at(i, s);
        if (variant_ == AdiVariant::douglas) next_.at(i, s) -= 0.5 * tau * t3_.at(i, s);
      }
    }
  }
  kernels::solve_along_y(ly_, next_, 1, nx - 1, options_.exec);
  std::swap(u_.values, next_.values);
  ++step_;
}

void AdiStepper2D::run() {
  while (step_ < problem_.n_steps) step();
}

GridFunction2D adi_solve_2d(const Evolution2D& problem, AdiVariant variant, SolverOptions options) {
  AdiStepper2D stepper(problem, variant, options);
  stepper.run();
  return stepper.current();
}

}  // namespace fracdiff
