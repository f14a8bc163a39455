#ifndef HYPERLANDAU_GRID_HPP
#define HYPERLANDAU_GRID_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hyperlandau/error.hpp"

namespace hyperlandau {

/// Uniform discretization of an interval of the positive half-line.
class Grid {
 public:
  static constexpr std::size_t min_count = 16;

  Grid(double u_min, double u_max, std::size_t count);

  /// Grid whose spacing is as close as possible to `h` without exceeding it.
  static Grid with_spacing(double u_min, double u_max, double h);

  double u_min() const noexcept { return u_min_; }
  double u_max() const noexcept { return u_max_; }
  std::size_t count() const noexcept { return count_; }
  double h() const noexcept { return h_; }

  double node(std::size_t i) const noexcept {
    return i + 1 == count_ ? u_max_ : u_min_ + static_cast<double>(i) * h_;
  }
  std::vector<double> nodes() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double u_min_;
  double u_max_;
  std::size_t count_;
  double h_;
};

/// Values of a real function at the nodes of a grid.
class SampledFunction {
 public:
  SampledFunction(Grid grid, std::vector<double> values);

  static SampledFunction sample(const Grid& grid, const std::function<double(double)>& f);
  static SampledFunction zeros(const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }

  SampledFunction operator+(const SampledFunction& rhs) const;
  SampledFunction operator-(const SampledFunction& rhs) const;
  SampledFunction operator*(double s) const;
  /// Pointwise product.
  SampledFunction times(const SampledFunction& rhs) const;

 private:
  Grid grid_;
  std::vector<double> values_;
};

void require_same_grid(const SampledFunction& a, const SampledFunction& b);

/// First derivative: centered second-order in the interior, one-sided
/// second-order three-point stencils at both ends.
SampledFunction derivative(const SampledFunction& f);

/// Second derivative: three-point centered in the interior, one-sided
/// second-order four-point stencils at both ends.
SampledFunction second_derivative(const SampledFunction& f);

enum class QuadratureRule {
  Trapezoid,
  /// One Richardson step on the trapezoid rule (composite Simpson), with a
  /// 3/8 panel closing an odd interval count.
  Richardson,
};

double quadrature(const SampledFunction& f, QuadratureRule rule = QuadratureRule::Richardson);

/// Trapezoid inner product <f, g> = sum_i w_i f_i g_i.
double inner_product(const SampledFunction& f, const SampledFunction& g);

/// sqrt(<f, f>) with the trapezoid weight.
double l2_norm(const SampledFunction& f);

}  // namespace hyperlandau

#endif  // HYPERLANDAU_GRID_HPP
