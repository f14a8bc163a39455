#include "hyperlandau/grid.hpp"

#include <cmath>
#include <sstream>

namespace hyperlandau {

Grid::Grid(double u_min, double u_max, std::size_t count)
    : u_min_(u_min), u_max_(u_max), count_(count), h_(0.0) {
  if (!(std::isfinite(u_min) && u_min > 0.0))
    throw Error(ErrorCode::DomainError, "grid must start strictly inside (0, inf)");
  if (!(std::isfinite(u_max) && u_max > u_min))
    throw Error(ErrorCode::DomainError, "grid requires u_max > u_min");
  if (count < min_count) {
    std::ostringstream os;
    os << "grid needs at least " << min_count << " points, got " << count;
    throw Error(ErrorCode::InvalidParameter, os.str());
  }
  h_ = (u_max - u_min) / static_cast<double>(count - 1);
}

Grid Grid::with_spacing(double u_min, double u_max, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidParameter, "grid spacing must be positive");
  const auto intervals = static_cast<std::size_t>(std::ceil((u_max - u_min) / h - 1e-9));
  return Grid(u_min, u_max, intervals + 1);
}

std::vector<double> Grid::nodes() const {
  std::vector<double> u(count_);
  for (std::size_t i = 0; i < count_; ++i) u[i] = node(i);
  return u;
}

SampledFunction::SampledFunction(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.count())
    throw Error(ErrorCode::GridMismatch, "sample count does not match grid");
  for (double v : values_)
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteSample, "sampled value is not finite");
}

SampledFunction SampledFunction::sample(const Grid& grid, const std::function<double(double)>& f) {
  std::vector<double> v(grid.count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid.node(i));
  return SampledFunction(grid, std::move(v));
}

SampledFunction SampledFunction::zeros(const Grid& grid) {
  return SampledFunction(grid, std::vector<double>(grid.count(), 0.0));
}

void require_same_grid(const SampledFunction& a, const SampledFunction& b) {
  if (!(a.grid() == b.grid())) throw Error(ErrorCode::GridMismatch, "functions live on different grids");
}

SampledFunction SampledFunction::operator+(const SampledFunction& rhs) const {
  require_same_grid(*this, rhs);
  std::vector<double> v(values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += rhs.values_[i];
  return SampledFunction(grid_, std::move(v));
}

SampledFunction SampledFunction::operator-(const SampledFunction& rhs) const {
  require_same_grid(*this, rhs);
  std::vector<double> v(values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= rhs.values_[i];
  return SampledFunction(grid_, std::move(v));
}

SampledFunction SampledFunction::operator*(double s) const {
  std::vector<double> v(values_);
  for (double& x : v) x *= s;
  return SampledFunction(grid_, std::move(v));
}

SampledFunction SampledFunction::times(const SampledFunction& rhs) const {
  require_same_grid(*this, rhs);
  std::vector<double> v(values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= rhs.values_[i];
  return SampledFunction(grid_, std::move(v));
}

SampledFunction derivative(const SampledFunction& f) {
  const auto y = f.values();
  const std::size_t n = y.size();
  const double h = f.grid().h();
  std::vector<double> d(n);
  d[0] = (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * h);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i - 1]) / (2.0 * h);
  d[n - 1] = (3.0 * y[n - 1] - 4.0 * y[n - 2] + y[n - 3]) / (2.0 * h);
  return SampledFunction(f.grid(), std::move(d));
}

SampledFunction second_derivative(const SampledFunction& f) {
  const auto y = f.values();
  const std::size_t n = y.size();
  const double h2 = f.grid().h() * f.grid().h();
  std::vector<double> d(n);
  d[0] = (2.0 * y[0] - 5.0 * y[1] + 4.0 * y[2] - y[3]) / h2;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (y[i + 1] - 2.0 * y[i] + y[i - 1]) / h2;
  d[n - 1] = (2.0 * y[n - 1] - 5.0 * y[n - 2] + 4.0 * y[n - 3] - y[n - 4]) / h2;
  return SampledFunction(f.grid(), std::move(d));
}

namespace {

double trapezoid(std::span<const double> y, double h) {
  double s = 0.5 * (y.front() + y.back());
  for (std::size_t i = 1; i + 1 < y.size(); ++i) s += y[i];
  return s * h;
}

// Composite Simpson on an even number of intervals.
double simpson(std::span<const double> y, double h) {
  double s = y.front() + y.back();
  for (std::size_t i = 1; i + 1 < y.size(); ++i) s += (i % 2 ? 4.0 : 2.0) * y[i];
  return s * h / 3.0;
}

}  // namespace

double quadrature(const SampledFunction& f, QuadratureRule rule) {
  const auto y = f.values();
  const double h = f.grid().h();
  if (rule == QuadratureRule::Trapezoid) return trapezoid(y, h);

  const std::size_t intervals = y.size() - 1;
  if (intervals % 2 == 0) return simpson(y, h);
  // Odd interval count: Simpson up to the last three intervals, 3/8 rule on those.
  const std::size_t m = y.size() - 3;
  const double head = simpson(y.first(m), h);
  const double tail = 3.0 * h / 8.0 * (y[m - 1] + 3.0 * y[m] + 3.0 * y[m + 1] + y[m + 2]);
  return head + tail;
}

double inner_product(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g);
  const auto a = f.values();
  const auto b = g.values();
  double s = 0.5 * (a.front() * b.front() + a.back() * b.back());
  for (std::size_t i = 1; i + 1 < a.size(); ++i) s += a[i] * b[i];
  return s * f.grid().h();
}

double l2_norm(const SampledFunction& f) { return std::sqrt(inner_product(f, f)); }

}  // namespace hyperlandau
