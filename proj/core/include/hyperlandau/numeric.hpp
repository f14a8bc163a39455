#ifndef HYPERLANDAU_NUMERIC_HPP
#define HYPERLANDAU_NUMERIC_HPP

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "hyperlandau/grid.hpp"
#include "hyperlandau/susy.hpp"

namespace hyperlandau {

/// Symmetric tridiagonal matrix -D2 + diag(V) with Dirichlet ends.
struct TridiagonalOperator {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  ///< one shorter than diagonal

  std::size_t size() const noexcept { return diagonal.size(); }
  std::vector<double> apply(const std::vector<double>& x) const;
};

/// Three-point Laplacian plus potential: diagonal 2/h^2 + V(u_i), off-diagonal -1/h^2.
/// Throws NonFinitePotential when V is not finite at some node.
TridiagonalOperator discretize(const std::function<double(double)>& potential, const Grid& grid);

/// Number of eigenvalues strictly below x (Sturm sequence count).
std::size_t sturm_count(const TridiagonalOperator& op, double x);

/// The k smallest eigenvalues in ascending order, by bisection on the
/// Sturm count down to machine resolution.
std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, std::size_t k);

/// Eigenvector for a converged eigenvalue by shifted inverse iteration.
/// Normalized to unit trapezoid norm on `grid`; the first extremum is positive.
SampledFunction eigenvector(const TridiagonalOperator& op, const Grid& grid, double eigenvalue);

/// Action of the off-diagonal Dirac-Weyl operator on (g1, i g2):
/// returns (L+ g2 / R, L- g1 / R).
std::pair<SampledFunction, SampledFunction> apply_weyl_operator(
    const std::pair<SampledFunction, SampledFunction>& g, const Superpotential& w, double R);

/// [1e-3, max(25, 40 / (A0 - max_level(A0)))] with 8000 points.
Grid default_grid(double A0);

/// Lowest k eigenvalues of -d2/du2 + V on `grid`; requires h <= 0.05.
std::vector<double> fd_spectrum(const std::function<double(double)>& potential, const Grid& grid,
                                std::size_t k);

struct LevelScan {
  double eigenvalue;     ///< on the original grid
  double shift;          ///< eigenvalue on the enlarged grid minus the original
  bool bound;            ///< |shift| <= bound_tolerance
};

/// Re-solves on [u_min, enlarged_u_max] at the same spacing and classifies each
/// of the lowest k levels: true bound states do not move when the box grows,
/// discretized continuum (box) states do.
std::vector<LevelScan> scan_bound_states(const std::function<double(double)>& potential,
                                         const Grid& grid, std::size_t k, double enlarged_u_max,
                                         double bound_tolerance = 1e-4);

}  // namespace hyperlandau

#endif  // HYPERLANDAU_NUMERIC_HPP
