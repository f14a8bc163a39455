#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyperlandau/model.hpp"

using namespace hyperlandau;

TEST_CASE("max_level examples") {
  CHECK(max_level(5.0) == 4);
  CHECK(max_level(5.5) == 5);
  CHECK(max_level(0.5) == 0);
  CHECK(max_level(1.0) == 0);
}

TEST_CASE("max_level is monotone and stays below A0") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(1e-3, 40.0);
  for (int i = 0; i < 10000; ++i) {
    const double a = dist(rng);
    const double b = dist(rng);
    const double lo = std::min(a, b), hi = std::max(a, b);
    CHECK(max_level(lo) <= max_level(hi));
    CHECK(max_level(lo) < lo);
    CHECK(max_level(lo) >= 0);
  }
  for (int k = 1; k < 30; ++k) CHECK(max_level(k) == k - 1);
}

TEST_CASE("default parameters are natural units") {
  const SystemParams p;
  CHECK(p.hbar == 1.0);
  CHECK(p.c == 1.0);
  CHECK(p.v_F == 1.0);
  CHECK(p.e_charge == 1.0);
  CHECK(p.R == 1.0);
  CHECK(p.mass == 1.0);
  CHECK(p.rest_energy() == 1.0);
  CHECK_NOTHROW(p.check());

  SystemParams massless;
  massless.mass = 0.0;
  CHECK_NOTHROW(massless.check());

  SystemParams bad;
  bad.R = 0.0;
  CHECK_THROWS_AS(bad.check(), Error);
  bad = SystemParams{};
  bad.mass = -1.0;
  CHECK_THROWS_AS(bad.check(), Error);
}

TEST_CASE("derived field quantities") {
  SystemParams p;
  p.R = 2.0;
  p.c = 3.0;
  const FieldConfig f{5.0};
  CHECK(f.B0(p) == doctest::Approx(15.0));
  CHECK(f.field(p) == doctest::Approx(-15.0 / 4.0));
}

TEST_CASE("validate: integer lambda passes with a warning") {
  const auto r = validate({}, {5.0}, {14, 2});
  CHECK(r.passed());
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].code == ViolationCode::NonHalfOddLambda);
  CHECK(r.violations[0].severity == Severity::Warning);
}

TEST_CASE("validate: failures") {
  auto r = validate({}, {5.0}, {8, 0});
  CHECK_FALSE(r.passed());
  CHECK(r.has(ViolationCode::LambdaTooSmall));

  r = validate({}, {5.0}, {14, 5});
  CHECK_FALSE(r.passed());
  CHECK(r.has(ViolationCode::LevelOutOfRange));

  r = validate({}, {5.0}, {14, -1});
  CHECK(r.has(ViolationCode::LevelOutOfRange));

  r = validate({}, {0.0}, {15, 0});
  CHECK(r.has(ViolationCode::NonPositiveA0));

  // lambda == A0 is not strictly above it.
  r = validate({}, {5.0}, {10, 0});
  CHECK(r.has(ViolationCode::LambdaTooSmall));

  SystemParams p;
  p.hbar = -1.0;
  r = validate(p, {5.0}, {15, 0});
  CHECK(r.has(ViolationCode::InvalidSystemParams));
}

TEST_CASE("validate: half-odd lambda is clean") {
  const auto r = validate({}, {5.0}, {15, 4});
  CHECK(r.passed());
  CHECK(r.violations.empty());
}

TEST_CASE("accepted quantum numbers satisfy n < A0 < lambda") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> a0(0.1, 12.0);
  std::uniform_int_distribution<int> tl(-5, 40), nn(-2, 14);
  int accepted = 0;
  for (int i = 0; i < 5000; ++i) {
    const double A0 = a0(rng);
    const QuantumNumbers qn{tl(rng), nn(rng)};
    if (validate({}, {A0}, qn).passed()) {
      ++accepted;
      CHECK(qn.n < A0);
      CHECK(qn.lambda() > A0);
    }
  }
  CHECK(accepted > 100);
}

TEST_CASE("embed examples") {
  const auto apex = embed(1e-300, 0.0, 1.0);
  CHECK(apex.x == doctest::Approx(0.0));
  CHECK(apex.y == 0.0);
  CHECK(apex.z == doctest::Approx(1.0));

  const auto p = embed(1.0, 0.0, 1.0);
  CHECK(p.x == doctest::Approx(1.1752011936438014).epsilon(1e-15));
  CHECK(p.y == 0.0);
  CHECK(p.z == doctest::Approx(1.5430806348152437).epsilon(1e-15));

  const auto q = embed(1.0, std::numbers::pi / 2, 2.0);
  CHECK(std::abs(q.x) < 1e-15);
  CHECK(q.y == doctest::Approx(2.0 * 1.1752011936438014));
  CHECK(q.z == doctest::Approx(2.0 * 1.5430806348152437));
}

TEST_CASE("embedded points lie on the hyperboloid") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uu(1e-6, 5.0), far(5.0, 20.0), ph(0.0, 2 * std::numbers::pi),
      rr(0.1, 10.0);
  for (int i = 0; i < 10000; ++i) {
    const double R = rr(rng);
    const auto p = embed(uu(rng), ph(rng), R);
    CHECK(std::abs(p.x * p.x + p.y * p.y - p.z * p.z + R * R) <= 1e-10 * R * R);
    CHECK(p.z > 0.0);
  }
  // Far from the apex the cancellation grows with z^2; the bound is relative there.
  for (int i = 0; i < 1000; ++i) {
    const double R = rr(rng);
    const auto p = embed(far(rng), ph(rng), R);
    CHECK(std::abs(p.x * p.x + p.y * p.y - p.z * p.z + R * R) <= 1e-12 * p.z * p.z);
  }
}
