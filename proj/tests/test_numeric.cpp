#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyperlandau/analytic.hpp"
#include "hyperlandau/numeric.hpp"
#include "oracles.hpp"

using namespace hyperlandau;

namespace {

auto v1_of(double A0, double lambda) {
  return [v = partner_potentials(Superpotential::constant_field(A0, lambda))](double u) { return v.v1(u); };
}
auto v2_of(double A0, double lambda) {
  return [v = partner_potentials(Superpotential::constant_field(A0, lambda))](double u) { return v.v2(u); };
}

const Grid& reference_grid() {
  static const Grid g(1e-3, 25.0, 8000);
  return g;
}

}  // namespace

TEST_CASE("grid construction") {
  const Grid g(1.0, 2.0, 101);
  CHECK(g.h() == doctest::Approx(0.01));
  CHECK(g.node(0) == 1.0);
  CHECK(g.node(100) == 2.0);
  CHECK_THROWS_AS(Grid(0.0, 1.0, 100), Error);
  CHECK_THROWS_AS(Grid(1.0, 1.0, 100), Error);
  CHECK_THROWS_AS(Grid(1.0, 2.0, 15), Error);
  const Grid s = Grid::with_spacing(1e-3, 30.0, 1e-3);
  CHECK(s.h() <= 1e-3);
  CHECK(s.h() > 0.9999e-3);
  CHECK_THROWS_AS(SampledFunction(g, std::vector<double>(100, 0.0)), Error);
  CHECK_THROWS_AS(SampledFunction::sample(g, [](double) { return NAN; }), Error);
}

TEST_CASE("finite-difference stencils are exact on quadratics") {
  const Grid g(0.5, 2.0, 31);
  const auto f = SampledFunction::sample(g, [](double u) { return 3 * u * u - u + 2; });
  const auto d = derivative(f);
  const auto d2 = second_derivative(f);
  for (std::size_t i = 0; i < g.count(); ++i) {
    CHECK(d[i] == doctest::Approx(6 * g.node(i) - 1).epsilon(1e-10));
    CHECK(d2[i] == doctest::Approx(6.0).epsilon(1e-8));
  }
}

TEST_CASE("discretize") {
  const Grid unit(1.0, 16.0, 16);  // h = 1
  const auto op = discretize([](double) { return 0.0; }, unit);
  for (double d : op.diagonal) CHECK(d == 2.0);
  for (double e : op.off_diagonal) CHECK(e == -1.0);
  CHECK(op.off_diagonal.size() == op.diagonal.size() - 1);

  const auto h1 = discretize(v1_of(5, 7), reference_grid());
  for (double d : h1.diagonal) CHECK(std::isfinite(d));
  // Near the apex V1 ~ s-(s- - 1)/u^2 with s- = 2.
  const double v_min = h1.diagonal[0] - 2.0 / (reference_grid().h() * reference_grid().h());
  CHECK(v_min == doctest::Approx(2e6).epsilon(1e-3));

  CHECK_THROWS_AS(discretize([](double u) { return 1.0 / (u - 1.0); }, unit), Error);
}

TEST_CASE("discrete Laplacian spectrum matches the closed form") {
  for (double c : {0.0, 3.5, -2.0}) {
    const Grid grid(1.0, 40.0, 40);  // h = 1
    const auto op = discretize([c](double) { return c; }, grid);
    const auto expected = oracle::discrete_laplacian_spectrum(40, 1.0, c);
    const auto got = lowest_eigenvalues(op, 40);
    for (std::size_t k = 0; k < 40; ++k) CHECK(std::abs(got[k] - expected[k]) <= 1e-10);
  }
  CHECK_THROWS_AS(lowest_eigenvalues(discretize([](double) { return 0.0; }, Grid(1, 2, 16)), 0), Error);
  CHECK_THROWS_AS(lowest_eigenvalues(discretize([](double) { return 0.0; }, Grid(1, 2, 16)), 17), Error);
}

TEST_CASE("Sturm bisection agrees with dense Jacobi rotations on random matrices") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + trial % 20;
    TridiagonalOperator op;
    op.diagonal.resize(n);
    op.off_diagonal.resize(n - 1);
    std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) dense[i][i] = op.diagonal[i] = dist(rng);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      // Some exact zeros to exercise the split case.
      const double e = trial % 7 == 0 && i % 3 == 0 ? 0.0 : dist(rng);
      op.off_diagonal[i] = dense[i][i + 1] = dense[i + 1][i] = e;
    }
    const auto expected = oracle::dense_symmetric_eigenvalues(dense);
    const auto got = lowest_eigenvalues(op, n);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(got[k] - expected[k]) <= 1e-10);
    for (std::size_t k = 0; k < n; ++k) CHECK(sturm_count(op, got[k] + 1e-9) >= k + 1);
  }
}

TEST_CASE("H1 and H2 spectra on the reference grid") {
  const auto e1 = fd_spectrum(v1_of(5, 7), reference_grid(), 5);
  const double expected[] = {0, 9, 16, 21, 24};
  for (int n = 0; n < 5; ++n) CHECK(std::abs(e1[n] - expected[n]) <= 1e-3 * std::max(1.0, expected[n]));
  const auto e2 = fd_spectrum(v2_of(5, 7), reference_grid(), 4);
  for (int n = 0; n < 4; ++n) CHECK(std::abs(e2[n] - expected[n + 1]) <= 1e-3 * expected[n + 1]);
  CHECK(e2[0] > 1.0);
}

TEST_CASE("coarse grids are rejected for eigensolves") {
  CHECK_THROWS_AS(fd_spectrum(v1_of(5, 7), Grid(1e-3, 25.0, 100), 3), Error);
}

TEST_CASE("default grid") {
  const Grid g = default_grid(5.0);
  CHECK(g.u_min() == 1e-3);
  CHECK(g.u_max() == 40.0);
  CHECK(g.count() == 8000);
  CHECK(default_grid(5.5).u_max() == doctest::Approx(80.0));
  CHECK(default_grid(3.7).u_max() == doctest::Approx(57.142857142857146));
  CHECK(default_grid(2.05).u_max() == doctest::Approx(800.0));
}

TEST_CASE("eigenvalues agree with the closed form for several fields") {
  struct Case {
    double A0, lambda;
  };
  for (const auto [A0, lambda] : {Case{5, 7}, Case{5.5, 7.5}, Case{3, 4.5}}) {
    const int top = max_level(A0);
    const auto fd = fd_spectrum(v1_of(A0, lambda), default_grid(A0), top + 1);
    for (int n = 0; n <= top; ++n) {
      const double eps = epsilon_n(A0, n);
      CHECK(std::abs(fd[n] - eps) <= 1e-3 * std::max(1.0, eps));
    }
  }
}

TEST_CASE("spectrum does not depend on lambda") {
  const auto a = fd_spectrum(v1_of(5, 7), reference_grid(), 5);
  const auto b = fd_spectrum(v1_of(5, 9), reference_grid(), 5);
  for (int n = 0; n < 5; ++n) CHECK(std::abs(a[n] - b[n]) <= 2e-3);
}

TEST_CASE("SUSY isospectrality of the FD partners") {
  struct Case {
    double A0, lambda;
  };
  for (const auto [A0, lambda] : {Case{5, 7}, Case{5.5, 7.5}, Case{3, 4.5}}) {
    const int top = max_level(A0);
    const auto grid = default_grid(A0);
    const auto e1 = fd_spectrum(v1_of(A0, lambda), grid, top + 1);
    const auto e2 = fd_spectrum(v2_of(A0, lambda), grid, top);
    CHECK(std::abs(e1[0]) <= 1e-3);
    for (int n = 1; n <= top; ++n) CHECK(std::abs(e1[n] - e2[n - 1]) <= 2e-3);
  }
}

TEST_CASE("second-order convergence of the lowest eigenvalue") {
  double previous = 0.0;
  for (std::size_t intervals : {1000, 2000, 4000, 8000}) {
    const double e0 = fd_spectrum(v1_of(5, 7), Grid(1e-3, 25.0, intervals + 1), 1)[0];
    if (previous != 0.0) CHECK(std::abs(previous) / std::abs(e0) >= 3.5);
    previous = e0;
  }
}

TEST_CASE("second-order convergence of the first excited level") {
  std::vector<double> errors;
  for (std::size_t intervals : {1000, 2000, 4000, 8000})
    errors.push_back(std::abs(fd_spectrum(v1_of(5, 7), Grid(1e-3, 25.0, intervals + 1), 2)[1] - 9.0));
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) CHECK(errors[i] / errors[i + 1] >= 3.5);
}

TEST_CASE("bound states are insensitive to enlarging the box") {
  const auto scan = scan_bound_states(v1_of(5, 7), reference_grid(), 8, 40.0);
  for (int i = 0; i < 5; ++i) {
    CHECK(scan[i].bound);
    CHECK(std::abs(scan[i].shift) <= 1e-4);
  }
  for (int i = 5; i < 8; ++i) {
    CHECK_FALSE(scan[i].bound);
    CHECK(scan[i].eigenvalue > 25.0);
    CHECK(std::abs(scan[i].shift) >= 1e-3);
  }
  CHECK_THROWS_AS(scan_bound_states(v1_of(5, 7), reference_grid(), 3, 20.0), Error);
}

TEST_CASE("eigenvectors of H1 against closed forms") {
  const auto op = discretize(v1_of(5, 7), reference_grid());
  const auto ev = lowest_eigenvalues(op, 5);

  const auto zero_mode = eigenvector(op, reference_grid(), ev[0]);
  const auto g0 = SampledFunction::sample(reference_grid(), ground_state(5, 7));
  CHECK(l2_norm(zero_mode - g0) <= 1e-3);
  CHECK(l2_norm(zero_mode) == doctest::Approx(1.0).epsilon(1e-12));

  const auto level2 = eigenvector(op, reference_grid(), ev[2]);
  const auto g12 = SampledFunction::sample(reference_grid(), radial_eigenpair(5, 7, 2).g1);
  CHECK(l2_norm(level2 - g12) <= 1e-2);

  std::vector<SampledFunction> modes;
  for (double e : ev) modes.push_back(eigenvector(op, reference_grid(), e));
  for (std::size_t i = 0; i < modes.size(); ++i)
    for (std::size_t j = i + 1; j < modes.size(); ++j) CHECK(std::abs(inner_product(modes[i], modes[j])) <= 1e-6);
}

TEST_CASE("eigenvector of the discrete Laplacian is a sine") {
  const std::size_t n = 200;
  const Grid grid(1.0, 200.0, n);  // h = 1
  const auto op = discretize([](double) { return 0.0; }, grid);
  const auto ev = lowest_eigenvalues(op, 1);
  const auto v = eigenvector(op, grid, ev[0]);
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = std::sin((i + 1) * std::numbers::pi / (n + 1));
  const auto sine = SampledFunction(grid, s);
  const auto expected = sine * (1.0 / l2_norm(sine));
  CHECK(l2_norm(v - expected) <= 1e-8);
}

TEST_CASE("apply_weyl_operator") {
  const Grid grid = Grid::with_spacing(1e-3, 30.0, 1e-3);
  const auto w = Superpotential::constant_field(5, 7);

  const auto p1 = radial_eigenpair(5, 7, 1);
  const auto g1 = SampledFunction::sample(grid, p1.g1);
  const auto g2 = SampledFunction::sample(grid, *p1.g2);
  const auto [top, bottom] = apply_weyl_operator({g1, g2}, w, 1.0);
  CHECK(l2_norm(top - g1 * 3.0) <= 1e-3);
  CHECK(l2_norm(bottom - g2 * 3.0) <= 1e-3);

  const auto g0 = SampledFunction::sample(grid, ground_state(5, 7));
  const auto [z1, z2] = apply_weyl_operator({g0, SampledFunction::zeros(grid)}, w, 1.0);
  CHECK(l2_norm(z1) <= 1e-4);
  CHECK(l2_norm(z2) <= 1e-4);

  for (int n = 1; n <= 4; ++n) {
    const auto p = radial_eigenpair(5, 7, n);
    const auto a = SampledFunction::sample(grid, p.g1);
    const auto b = SampledFunction::sample(grid, *p.g2);
    const auto once = apply_weyl_operator({a, b}, w, 1.0);
    const auto twice = apply_weyl_operator(once, w, 1.0);
    CHECK(l2_norm(twice.first - a * p.epsilon) <= 2e-3);
    CHECK(l2_norm(twice.second - b * p.epsilon) <= 2e-3);
  }

  // R scales the eigenvalue as 1/R.
  const auto [r1, r2] = apply_weyl_operator({g1, g2}, w, 2.0);
  CHECK(l2_norm(r1 - g1 * 1.5) <= 1e-3);

  const Grid other = Grid::with_spacing(1e-3, 20.0, 1e-3);
  CHECK_THROWS_AS(apply_weyl_operator({g1, SampledFunction::zeros(other)}, w, 1.0), Error);
}

TEST_CASE("quadrature") {
  const Grid grid = Grid::with_spacing(0.001, 30.0, 1e-3);
  const auto f = SampledFunction::sample(grid, [](double u) { return std::exp(-u); });
  CHECK(std::abs(quadrature(f) - (std::exp(-0.001) - std::exp(-30.0))) <= 1e-9);
  // Plain trapezoid carries the O(h^2) error Richardson removes.
  CHECK(std::abs(quadrature(f, QuadratureRule::Trapezoid) - (std::exp(-0.001) - std::exp(-30.0))) > 1e-9);
  CHECK(quadrature(SampledFunction::zeros(grid)) == 0.0);

  // Odd interval count uses the 3/8 closing panel.
  const Grid odd(1.0, 2.0, 18);
  const auto cubic = SampledFunction::sample(odd, [](double u) { return u * u * u; });
  CHECK(quadrature(cubic) == doctest::Approx(3.75).epsilon(1e-13));

  const auto pair = radial_eigenpair(5, 7, 0);
  const auto g = SampledFunction::sample(Grid::with_spacing(1e-6, 30.0, 1e-3), pair.g1);
  CHECK(std::abs(quadrature(g.times(g)) - 1.0) <= 1e-8);
}
