#include "hyperlandau/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hyperlandau/model.hpp"

namespace hyperlandau {

std::vector<double> TridiagonalOperator::apply(const std::vector<double>& x) const {
  const std::size_t n = size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = diagonal[i] * x[i];
    if (i > 0) s += off_diagonal[i - 1] * x[i - 1];
    if (i + 1 < n) s += off_diagonal[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

TridiagonalOperator discretize(const std::function<double(double)>& potential, const Grid& grid) {
  const std::size_t n = grid.count();
  const double inv_h2 = 1.0 / (grid.h() * grid.h());
  TridiagonalOperator op;
  op.diagonal.resize(n);
  op.off_diagonal.assign(n - 1, -inv_h2);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = grid.node(i);
    const double v = potential(u);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "potential is not finite at u = " << u;
      throw Error(ErrorCode::NonFinitePotential, os.str());
    }
    op.diagonal[i] = 2.0 * inv_h2 + v;
  }
  return op;
}

std::size_t sturm_count(const TridiagonalOperator& op, double x) {
  const auto& d = op.diagonal;
  const auto& e = op.off_diagonal;
  // Pivots of the LDL^T factorization of (T - x I); negatives count eigenvalues below x.
  constexpr double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  std::size_t count = 0;
  double q = d[0] - x;
  for (std::size_t i = 0;; ++i) {
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
    if (i + 1 == d.size()) break;
    q = d[i + 1] - x - e[i] * e[i] / q;
  }
  return count;
}

namespace {

std::pair<double, double> gershgorin_bounds(const TridiagonalOperator& op) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t n = op.size();
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(op.off_diagonal[i - 1]);
    if (i + 1 < n) r += std::abs(op.off_diagonal[i]);
    lo = std::min(lo, op.diagonal[i] - r);
    hi = std::max(hi, op.diagonal[i] + r);
  }
  return {lo, hi};
}

}  // namespace

std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, std::size_t k) {
  if (k == 0 || k > op.size())
    throw Error(ErrorCode::InvalidParameter, "requested eigenvalue count outside [1, size]");
  const auto [lower, upper] = gershgorin_bounds(op);
  const double pad = 1e-12 * std::max(std::abs(lower), std::abs(upper)) + 1e-300;

  std::vector<double> result;
  result.reserve(k);
  double floor = lower - pad;
  for (std::size_t j = 0; j < k; ++j) {
    // Smallest x with count(x) > j.
    double lo = floor;
    double hi = upper + pad;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (sturm_count(op, mid) > j) hi = mid;
      else lo = mid;
    }
    const double value = 0.5 * (lo + hi);
    result.push_back(value);
    floor = lo;
  }
  return result;
}

namespace {

// Solves (T - shift I) x = b with partial pivoting (the dgtsv scheme); the
// factorization is reused across inverse-iteration sweeps.
class ShiftedTridiagonalSolver {
 public:
  ShiftedTridiagonalSolver(const TridiagonalOperator& op, double shift) {
    const std::size_t n = op.size();
    dl_ = op.off_diagonal;
    du_ = op.off_diagonal;
    d_ = op.diagonal;
    for (double& x : d_) x -= shift;
    du2_.assign(n > 2 ? n - 2 : 0, 0.0);
    swapped_.assign(n, false);

    const double tiny = 1e-14 * (std::abs(shift) + 1.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (d_[i] == 0.0) d_[i] = tiny;
        const double f = dl_[i] / d_[i];
        dl_[i] = f;
        d_[i + 1] -= f * du_[i];
      } else {
        swapped_[i] = true;
        const double f = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = f;
        const double temp = d_[i + 1];
        d_[i + 1] = du_[i] - f * temp;
        du_[i] = temp;
        if (i + 2 < n) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -f * du2_[i];
        }
      }
    }
    if (d_[n - 1] == 0.0) d_[n - 1] = tiny;
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = d_.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped_[i]) std::swap(b[i], b[i + 1]);
      b[i + 1] -= dl_[i] * b[i];
    }
    b[n - 1] /= d_[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
    for (std::size_t i = n - 2; i-- > 0;)
      b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
  }

 private:
  std::vector<double> d_, dl_, du_, du2_;
  std::vector<bool> swapped_;
};

void normalize_with_sign(std::vector<double>& x, double h) {
  double s = 0.5 * (x.front() * x.front() + x.back() * x.back());
  for (std::size_t i = 1; i + 1 < x.size(); ++i) s += x[i] * x[i];
  const double norm = std::sqrt(s * h);
  for (double& v : x) v /= norm;

  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::abs(v));
  const double threshold = 1e-3 * peak;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool last = i + 1 == x.size();
    if (std::abs(x[i]) >= threshold && (last || std::abs(x[i + 1]) <= std::abs(x[i]))) {
      if (x[i] < 0.0)
        for (double& v : x) v = -v;
      return;
    }
  }
}

}  // namespace

SampledFunction eigenvector(const TridiagonalOperator& op, const Grid& grid, double eigenvalue) {
  if (op.size() != grid.count()) throw Error(ErrorCode::GridMismatch, "operator and grid sizes differ");
  const std::size_t n = op.size();
  const double h = grid.h();
  const ShiftedTridiagonalSolver solver(op, eigenvalue);

  // Deterministic start vector with components along every mode.
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i));
  normalize_with_sign(x, h);

  constexpr int max_sweeps = 50;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    std::vector<double> next = x;
    solver.solve(next);
    for (double v : next)
      if (!std::isfinite(v)) throw Error(ErrorCode::ConvergenceFailure, "inverse iteration overflowed");
    normalize_with_sign(next, h);
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) change = std::max(change, std::abs(next[i] - x[i]));
    x = std::move(next);
    if (change < 1e-12) return SampledFunction(grid, std::move(x));
  }
  throw Error(ErrorCode::ConvergenceFailure, "inverse iteration did not converge");
}

std::pair<SampledFunction, SampledFunction> apply_weyl_operator(
    const std::pair<SampledFunction, SampledFunction>& g, const Superpotential& w, double R) {
  require_same_grid(g.first, g.second);
  if (!(R > 0.0)) throw Error(ErrorCode::InvalidParameter, "R must be positive");
  return {ladder_apply(LadderDirection::Raise, w, g.second) * (1.0 / R),
          ladder_apply(LadderDirection::Lower, w, g.first) * (1.0 / R)};
}

Grid default_grid(double A0) {
  if (!(A0 > 0.0)) throw Error(ErrorCode::InvalidParameter, "A0 must be positive");
  const double slowest = A0 - max_level(A0);
  return Grid(1e-3, std::max(25.0, 40.0 / slowest), 8000);
}

std::vector<double> fd_spectrum(const std::function<double(double)>& potential, const Grid& grid,
                                std::size_t k) {
  if (grid.h() > 0.05) {
    std::ostringstream os;
    os << "grid spacing " << grid.h() << " exceeds 0.05";
    throw Error(ErrorCode::GridTooCoarse, os.str());
  }
  return lowest_eigenvalues(discretize(potential, grid), k);
}

std::vector<LevelScan> scan_bound_states(const std::function<double(double)>& potential,
                                         const Grid& grid, std::size_t k, double enlarged_u_max,
                                         double bound_tolerance) {
  if (!(enlarged_u_max > grid.u_max()))
    throw Error(ErrorCode::InvalidParameter, "enlarged box must extend past the original");
  const Grid enlarged = Grid::with_spacing(grid.u_min(), enlarged_u_max, grid.h());
  const auto base = fd_spectrum(potential, grid, k);
  const auto wide = fd_spectrum(potential, enlarged, k);
  std::vector<LevelScan> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double shift = wide[i] - base[i];
    out.push_back({base[i], shift, std::abs(shift) <= bound_tolerance});
  }
  return out;
}

}  // namespace hyperlandau
