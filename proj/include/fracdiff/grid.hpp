#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fracdiff {

/// Uniform mesh x_j = a + j h, j = 0..m, h = (b - a) / m.
class Grid1D {
 public:
  Grid1D(double a, double b, int m);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  int m() const noexcept { return m_; }
  double h() const noexcept { return h_; }
  double x(int j) const noexcept { return a_ + j * h_; }
  std::size_t node_count() const noexcept { return static_cast<std::size_t>(m_) + 1; }
  std::size_t interior_count() const noexcept { return static_cast<std::size_t>(m_) - 1; }

  bool operator==(const Grid1D&) const = default;

 private:
  double a_;
  double b_;
  int m_;
  double h_;
};

/// Node values including both boundary nodes.
struct GridFunction1D {
  Grid1D grid;
  std::vector<double> values;

  explicit GridFunction1D(const Grid1D& g) : grid(g), values(g.node_count(), 0.0) {}
  GridFunction1D(const Grid1D& g, std::vector<double> v);

  double& operator[](std::size_t j) { return values[j]; }
  double operator[](std::size_t j) const { return values[j]; }
  std::span<const double> interior() const {
    return std::span<const double>(values).subspan(1, grid.interior_count());
  }

  static GridFunction1D sample(const Grid1D& g, const std::function<double(double)>& fn);
};

struct Grid2D {
  Grid1D x;
  Grid1D y;

  bool operator==(const Grid2D&) const = default;
};

/// Row-major over (i, s): index i * (my + 1) + s, with i the x index. Includes the boundary ring.
struct GridFunction2D {
  Grid2D grid;
  std::vector<double> values;

  explicit GridFunction2D(const Grid2D& g);

  std::size_t nx() const noexcept { return grid.x.node_count(); }
  std::size_t ny() const noexcept { return grid.y.node_count(); }
  double& at(std::size_t i, std::size_t s) { return values[i * ny() + s]; }
  double at(std::size_t i, std::size_t s) const { return values[i * ny() + s]; }

  static GridFunction2D sample(const Grid2D& g, const std::function<double(double, double)>& fn);
};

}  // namespace fracdiff
