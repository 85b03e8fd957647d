#include "fracdiff/grid.hpp"

#include <cmath>
#include <string>

#include "fracdiff/error.hpp"

namespace fracdiff {

Grid1D::Grid1D(double a, double b, int m) : a_(a), b_(b), m_(m), h_(0.0) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
    throw InvalidArgument("grid needs finite endpoints with a < b");
  }
  if (m < 4) throw InvalidArgument("grid needs at least 4 intervals, got " + std::to_string(m));
  h_ = (b - a) / m;
}

GridFunction1D::GridFunction1D(const Grid1D& g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.node_count()) {
    throw InvalidArgument("grid function length " + std::to_string(values.size()) +
                          " does not match node count " + std::to_string(grid.node_count()));
  }
}

GridFunction1D GridFunction1D::sample(const Grid1D& g, const std::function<double(double)>& fn) {
  GridFunction1D out(g);
  for (int j = 0; j <= g.m(); ++j) out.values[j] = fn(g.x(j));
  return out;
}

GridFunction2D::GridFunction2D(const Grid2D& g)
    : grid(g), values(g.x.node_count() * g.y.node_count(), 0.0) {}

GridFunction2D GridFunction2D::sample(const Grid2D& g,
                                      const std::function<double(double, double)>& fn) {
  GridFunction2D out(g);
  for (int i = 0; i <= g.x.m(); ++i) {
    for (int s = 0; s <= g.y.m(); ++s) out.at(i, s) = fn(g.x.x(i), g.y.x(s));
  }
  return out;
}

}  // namespace fracdiff
