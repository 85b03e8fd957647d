#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace fracdiff {

/// O(n log n) product with the lower-Hessenberg Toeplitz matrix T[i][j] = w[i - j + 1]
/// (or its transpose) through a 2n circulant embedding. Backed by FFTW.
///
/// Owns scratch buffers and plans, so one instance must not be used from several
/// threads at once.
class ToeplitzFft {
 public:
  ToeplitzFft(std::span<const double> w, std::size_t n, bool transpose);
  ~ToeplitzFft();
  ToeplitzFft(ToeplitzFft&&) noexcept;
  ToeplitzFft& operator=(ToeplitzFft&&) noexcept;
  ToeplitzFft(const ToeplitzFft&) = delete;
  ToeplitzFft& operator=(const ToeplitzFft&) = delete;

  std::size_t size() const noexcept { return n_; }
  void multiply(std::span<const double> x, std::span<double> y);

 private:
  struct Plans;
  std::size_t n_ = 0;
  std::vector<std::complex<double>> symbol_;
  std::unique_ptr<Plans> plans_;
};

}  // namespace fracdiff
