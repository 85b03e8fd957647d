#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracdiff/grid.hpp"

namespace fracdiff {

/// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<double>& data() const noexcept { return data_; }

  DenseMatrix transposed() const;

  /// y = A x
  void multiply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> operator*(std::span<const double> x) const;

  /// this += scale * other
  DenseMatrix& add_scaled(const DenseMatrix& other, double scale);
  DenseMatrix& scale(double s);

  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// LU factorization with partial pivoting, PA = LU. Immutable after construction;
/// concurrent solve() calls with distinct right-hand sides are safe.
class DenseLU {
 public:
  explicit DenseLU(DenseMatrix a);

  std::size_t size() const noexcept { return lu_.rows(); }

  std::vector<double> solve(std::span<const double> b) const;
  /// Overwrites x (holding b on entry) with the solution.
  void solve_in_place(std::span<double> x) const;

  /// Rebuilds P^T L U, for testing.
  DenseMatrix reconstruct() const;

 private:
  DenseMatrix lu_;
  std::vector<std::size_t> perm_;  // row i of PA is row perm_[i] of A
};

inline DenseLU lu_factor(DenseMatrix a) { return DenseLU(std::move(a)); }
inline std::vector<double> lu_solve(const DenseLU& lu, std::span<const double> b) {
  return lu.solve(b);
}

/// n x n tridiagonal matrix; lower[0] and upper[n-1] are unused.
struct Tridiagonal {
  std::vector<double> lower;
  std::vector<double> diag;
  std::vector<double> upper;

  Tridiagonal() = default;
  Tridiagonal(std::size_t n, double lo, double di, double up);

  std::size_t size() const noexcept { return diag.size(); }
  void multiply(std::span<const double> x, std::span<double> y) const;
  DenseMatrix to_dense() const;
};

/// Thomas algorithm without pivoting; throws SingularMatrixError on a zero pivot.
std::vector<double> thomas_solve(const Tridiagonal& t, std::span<const double> rhs);

/// y = T x for the lower-Hessenberg Toeplitz matrix T[i][j] = w[i - j + 1] (zero when
/// i - j + 1 < 0), or its transpose. w needs n + 1 entries for an n x n matrix.
void toeplitz_hessenberg_multiply(std::span<const double> w, std::span<const double> x,
                                  std::span<double> y, bool transpose);

struct NormPair {
  double l2 = 0.0;
  double linf = 0.0;
};

/// Discrete L2 and max norms of the interior-node difference. Sums run in index order.
NormPair norms(const GridFunction1D& numeric, const GridFunction1D& exact);
NormPair norms(const GridFunction2D& numeric, const GridFunction2D& exact);

}  // namespace fracdiff
