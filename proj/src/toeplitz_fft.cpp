#include "fracdiff/toeplitz_fft.hpp"

#include <fftw3.h>

#include <algorithm>

#include "fracdiff/error.hpp"

namespace fracdiff {

struct ToeplitzFft::Plans {
  std::size_t len = 0;
  double* real = nullptr;
  fftw_complex* spec = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  explicit Plans(std::size_t l) : len(l) {
    real = fftw_alloc_real(len);
    spec = fftw_alloc_complex(len / 2 + 1);
    forward = fftw_plan_dft_r2c_1d(static_cast<int>(len), real, spec, FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_1d(static_cast<int>(len), spec, real, FFTW_ESTIMATE);
  }
  ~Plans() {
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
    fftw_free(real);
    fftw_free(spec);
  }
  Plans(const Plans&) = delete;
  Plans& operator=(const Plans&) = delete;
};

ToeplitzFft::ToeplitzFft(std::span<const double> w, std::size_t n, bool transpose) : n_(n) {
  if (n == 0 || w.size() < n + 1) throw InvalidArgument("ToeplitzFft needs n >= 1 and n + 1 weights");
  const std::size_t len = 2 * n;
  plans_ = std::make_unique<Plans>(len);

  // First column of the circulant: Toeplitz first column, a zero, then the first row reversed.
  std::vector<double> col(len, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    // column entry T[i][0] and row entry T[0][i]
    const double c = transpose ? (i <= 1 ? w[1 - i] : 0.0) : w[i + 1];
    col[i] = c;
  }
  for (std::size_t j = 1; j < n; ++j) {
    const double r = transpose ? w[j + 1] : (j <= 1 ? w[1 - j] : 0.0);
    col[len - j] = r;
  }
  std::copy(col.begin(), col.end(), plans_->real);
  fftw_execute(plans_->forward);
  symbol_.resize(len / 2 + 1);
  for (std::size_t k = 0; k < symbol_.size(); ++k) {
    symbol_[k] = {plans_->spec[k][0], plans_->spec[k][1]};
  }
}

ToeplitzFft::~ToeplitzFft() = default;
ToeplitzFft::ToeplitzFft(ToeplitzFft&&) noexcept = default;
ToeplitzFft& ToeplitzFft::operator=(ToeplitzFft&&) noexcept = default;

void ToeplitzFft::multiply(std::span<const double> x, std::span<double> y) {
  if (x.size() != n_ || y.size() != n_) throw InvalidArgument("ToeplitzFft size mismatch");
  const std::size_t len = plans_->len;
  std::copy(x.begin(), x.end(), plans_->real);
  std::fill(plans_->real + n_, plans_->real + len, 0.0);
  fftw_execute(plans_->forward);
  for (std::size_t k = 0; k < symbol_.size(); ++k) {
    const std::complex<double> v(plans_->spec[k][0], plans_->spec[k][1]);
    const auto p = v * symbol_[k];
    plans_->spec[k][0] = p.real();
    plans_->spec[k][1] = p.imag();
  }
  fftw_execute(plans_->backward);
  const double inv = 1.0 / static_cast<double>(len);
  for (std::size_t i = 0; i < n_; ++i) y[i] = plans_->real[i] * inv;
}

}  // namespace fracdiff
