#include "fracdiff/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "fracdiff/error.hpp"

namespace fracdiff {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

void DenseMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != cols_ || y.size() != rows_) {
    throw InvalidArgument("matrix-vector size mismatch");
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    const double* r = data_.data() + i * cols_;
    double acc = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
}

std::vector<double> DenseMatrix::operator*(std::span<const double> x) const {
  std::vector<double> y(rows_);
  multiply(x, y);
  return y;
}

DenseMatrix& DenseMatrix::add_scaled(const DenseMatrix& other, double s) {
  if (other.rows_ != rows_ || other.cols_ != cols_) {
    throw InvalidArgument("matrix shape mismatch in add_scaled");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += s * other.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::scale(double s) {
  for (auto& v : data_) v *= s;
  return *this;
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

DenseLU::DenseLU(DenseMatrix a) : lu_(std::move(a)) {
  const std::size_t n = lu_.rows();
  if (n != lu_.cols()) throw InvalidArgument("LU factorization needs a square matrix");
  perm_.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

  const double tiny = static_cast<double>(n) * std::numeric_limits<double>::epsilon() *
                      std::max(lu_.max_abs(), std::numeric_limits<double>::min());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (!(best > tiny)) {
      throw SingularMatrixError("matrix is singular to working precision at column " +
                                std::to_string(k));
    }
    if (piv != k) {
      std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(piv).begin());
      std::swap(perm_[k], perm_[piv]);
    }
    const double inv = 1.0 / lu_(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = lu_(i, k) * inv;
      lu_(i, k) = l;
      if (l == 0.0) continue;
      auto ri = lu_.row(i);
      const auto rk = lu_.row(k);
      for (std::size_t j = k + 1; j < n; ++j) ri[j] -= l * rk[j];
    }
  }
}

void DenseLU::solve_in_place(std::span<double> x) const {
  const std::size_t n = size();
  if (x.size() != n) throw InvalidArgument("LU solve size mismatch");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = x[perm_[i]];
  for (std::size_t i = 1; i < n; ++i) {
    const auto r = lu_.row(i);
    double acc = y[i];
    for (std::size_t j = 0; j < i; ++j) acc -= r[j] * y[j];
    y[i] = acc;
  }
  for (std::size_t i = n; i-- > 0;) {
    const auto r = lu_.row(i);
    double acc = y[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= r[j] * y[j];
    y[i] = acc / r[i];
  }
  std::copy(y.begin(), y.end(), x.begin());
}

std::vector<double> DenseLU::solve(std::span<const double> b) const {
  std::vector<double> x(b.begin(), b.end());
  solve_in_place(x);
  return x;
}

DenseMatrix DenseLU::reconstruct() const {
  const std::size_t n = size();
  DenseMatrix pa(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      const std::size_t kmax = std::min(i, j);
      for (std::size_t k = 0; k < kmax; ++k) acc += lu_(i, k) * lu_(k, j);
      acc += (i <= j) ? lu_(i, j) : lu_(i, j) * lu_(j, j);
      pa(i, j) = acc;
    }
  }
  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(perm_[i], j) = pa(i, j);
  }
  return a;
}

Tridiagonal::Tridiagonal(std::size_t n, double lo, double di, double up)
    : lower(n, lo), diag(n, di), upper(n, up) {
  if (n > 0) {
    lower[0] = 0.0;
    upper[n - 1] = 0.0;
  }
}

void Tridiagonal::multiply(std::span<const double> x, std::span<double> y) const {
  const std::size_t n = size();
  if (x.size() != n || y.size() != n) throw InvalidArgument("tridiagonal size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag[i] * x[i];
    if (i > 0) acc += lower[i] * x[i - 1];
    if (i + 1 < n) acc += upper[i] * x[i + 1];
    y[i] = acc;
  }
}

DenseMatrix Tridiagonal::to_dense() const {
  const std::size_t n = size();
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = diag[i];
    if (i > 0) out(i, i - 1) = lower[i];
    if (i + 1 < n) out(i, i + 1) = upper[i];
  }
  return out;
}

std::vector<double> thomas_solve(const Tridiagonal& t, std::span<const double> rhs) {
  const std::size_t n = t.size();
  if (rhs.size() != n || t.lower.size() != n || t.upper.size() != n) {
    throw InvalidArgument("tridiagonal solve size mismatch");
  }
  if (n == 0) return {};
  std::vector<double> c(n), d(n), x(n);
  double m = t.diag[0];
  if (m == 0.0) throw SingularMatrixError("zero pivot in tridiagonal solve at row 0");
  c[0] = t.upper[0] / m;
  d[0] = rhs[0] / m;
  for (std::size_t i = 1; i < n; ++i) {
    m = t.diag[i] - t.lower[i] * c[i - 1];
    if (m == 0.0) {
      throw SingularMatrixError("zero pivot in tridiagonal solve at row " + std::to_string(i));
    }
    c[i] = t.upper[i] / m;
    d[i] = (rhs[i] - t.lower[i] * d[i - 1]) / m;
  }
  x[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

void toeplitz_hessenberg_multiply(std::span<const double> w, std::span<const double> x,
                                  std::span<double> y, bool transpose) {
  const std::size_t n = x.size();
  if (y.size() != n || w.size() < n + 1) throw InvalidArgument("Toeplitz multiply size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    if (!transpose) {
      // row i: columns 0..min(i+1, n-1), entry w[i - j + 1]
      const std::size_t jmax = std::min(i + 1, n - 1);
      for (std::size_t j = 0; j <= jmax; ++j) acc += w[i - j + 1] * x[j];
    } else {
      const std::size_t jmin = i == 0 ? 0 : i - 1;
      for (std::size_t j = jmin; j < n; ++j) acc += w[j - i + 1] * x[j];
    }
    y[i] = acc;
  }
}

NormPair norms(const GridFunction1D& numeric, const GridFunction1D& exact) {
  if (!(numeric.grid == exact.grid) || numeric.values.size() != exact.values.size()) {
    throw InvalidArgument("norms: grid mismatch");
  }
  const int m = numeric.grid.m();
  double sum = 0.0, mx = 0.0;
  for (int j = 1; j < m; ++j) {
    const double d = numeric.values[j] - exact.values[j];
    sum += d * d;
    mx = std::max(mx, std::abs(d));
  }
  return {std::sqrt(numeric.grid.h() * sum), mx};
}

NormPair norms(const GridFunction2D& numeric, const GridFunction2D& exact) {
  if (!(numeric.grid == exact.grid) || numeric.values.size() != exact.values.size()) {
    throw InvalidArgument("norms: grid mismatch");
  }
  const int mx_ = numeric.grid.x.m(), my_ = numeric.grid.y.m();
  double sum = 0.0, mx = 0.0;
  for (int i = 1; i < mx_; ++i) {
    for (int s = 1; s < my_; ++s) {
      const double d = numeric.at(i, s) - exact.at(i, s);
      sum += d * d;
      mx = std::max(mx, std::abs(d));
    }
  }
  return {std::sqrt(numeric.grid.x.h() * numeric.grid.y.h() * sum), mx};
}

}  // namespace fracdiff
