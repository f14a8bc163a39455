#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <ostream>
#include <random>
#include <thread>

#include "hyperlandau/analytic.hpp"
#include "hyperlandau/numeric.hpp"
#include "hyperlandau/susy.hpp"
#include "hyperlandau_cli/cli.hpp"

namespace hyperlandau::cli {

namespace {

struct Check {
  std::string name;
  double tolerance;
  std::function<double()> measure;
};

double relative_gap(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

Grid spectrum_grid(const RunConfig& config) {
  const Grid base = default_grid(config.A0);
  return Grid(config.u_min.value_or(base.u_min()), config.u_max.value_or(base.u_max()),
              config.points.value_or(base.count()));
}

Grid fine_grid(double A0, int n) { return Grid::with_spacing(1e-3, normalization_cutoff(A0, n), 1e-3); }

std::vector<Check> build_checks(const RunConfig& config) {
  const double A0 = config.A0;
  const double lambda = 0.5 * config.two_lambda;
  const int top = max_level(A0);
  const auto params = config.system();
  const auto v1 = [=](double u) { return v1_constant_field(A0, lambda, u); };
  const auto v2 = [=](double u) { return v2_constant_field(A0, lambda, u); };

  std::vector<Check> checks;

  checks.push_back({"spectrum_match", 1e-3, [=] {
                      const auto fd = fd_spectrum(v1, spectrum_grid(config), top + 1);
                      double worst = 0.0;
                      for (int n = 0; n <= top; ++n) {
                        double want = epsilon_n(A0, n);
                        if (config.inject_fault && n == 1) want += 1e-2;
                        worst = std::max(worst, relative_gap(fd[n], want));
                      }
                      return worst;
                    }});

  checks.push_back({"shape_invariance", 1e-10, [] {
                      std::mt19937_64 rng(1729);
                      std::uniform_real_distribution<double> a(0.1, 20.0), extra(0.0, 10.0), x(0.05, 10.0);
                      double worst = 0.0;
                      for (int i = 0; i < 1000; ++i) {
                        const double A = a(rng), l = A + extra(rng), u = x(rng);
                        const double base = std::abs(v1_constant_field(A, l, u));
                        worst = std::max(worst, std::abs(shape_invariance_residual(A, l, u)) / (1.0 + base));
                      }
                      return worst;
                    }});

  checks.push_back({"ladder_closure", 1e-4, [=] {
                      const auto w = Superpotential::constant_field(A0, lambda);
                      double worst = 0.0;
                      for (int n = 1; n <= top; ++n) {
                        const auto pair = radial_eigenpair(A0, lambda, n);
                        const Grid grid = fine_grid(A0, n);
                        const auto g1 = SampledFunction::sample(grid, pair.g1);
                        const auto g2 = SampledFunction::sample(grid, *pair.g2);
                        const double root = std::sqrt(pair.epsilon);
                        worst = std::max(worst, l2_norm(ladder_apply(LadderDirection::Lower, w, g1) - g2 * root));
                        worst = std::max(worst, l2_norm(ladder_apply(LadderDirection::Raise, w, g2) - g1 * root));
                      }
                      return worst;
                    }});

  checks.push_back({"intertwining", 1e-3, [=] {
                      const auto w = Superpotential::constant_field(A0, lambda);
                      const auto bump = SampledFunction::sample(Grid::with_spacing(0.5, 6.5, 1e-3), [](double u) {
                        const double x = (u - 3.5) / 0.35;
                        return std::exp(-0.5 * x * x);
                      });
                      return intertwining_residual(w, bump);
                    }});

  checks.push_back({"isospectrality", 1e-3, [=] {
                      const Grid grid = spectrum_grid(config);
                      const auto h1 = fd_spectrum(v1, grid, top + 1);
                      if (top == 0) return 0.0;
                      const auto h2 = fd_spectrum(v2, grid, top);
                      double worst = 0.0;
                      for (int k = 0; k < top; ++k) worst = std::max(worst, relative_gap(h2[k], h1[k + 1]));
                      return worst;
                    }});

  checks.push_back({"normalization", 1e-6, [=] {
                      double worst = 0.0;
                      for (int n = 0; n <= top; ++n) {
                        const auto pair = radial_eigenpair(A0, lambda, n);
                        const Grid grid = Grid::with_spacing(1e-6, normalization_cutoff(A0, n), 1e-3);
                        const auto g1 = SampledFunction::sample(grid, pair.g1);
                        worst = std::max(worst, std::abs(quadrature(g1.times(g1)) - 1.0));
                        if (pair.g2) {
                          const auto g2 = SampledFunction::sample(grid, *pair.g2);
                          worst = std::max(worst, std::abs(quadrature(g2.times(g2)) - 1.0));
                        }
                      }
                      return worst;
                    }});

  checks.push_back({"schrodinger_residual", 1e-3, [=] {
                      const auto w = Superpotential::constant_field(A0, lambda);
                      double worst = 0.0;
                      for (int n = 0; n <= top; ++n) {
                        const auto pair = radial_eigenpair(A0, lambda, n);
                        const Grid grid = fine_grid(A0, n);
                        const auto g1 = SampledFunction::sample(grid, pair.g1);
                        const auto r1 = apply_partner_hamiltonian(1, w, g1) - g1 * pair.epsilon;
                        worst = std::max(worst, l2_norm(r1) / l2_norm(g1));
                        if (pair.g2) {
                          const auto g2 = SampledFunction::sample(grid, *pair.g2);
                          const auto r2 = apply_partner_hamiltonian(2, w, g2) - g2 * pair.epsilon;
                          worst = std::max(worst, l2_norm(r2) / l2_norm(g2));
                        }
                      }
                      return worst;
                    }});

  checks.push_back({"spinor_square_identity", 1e-12, [=] {
                      const double mc2 = params.rest_energy();
                      double worst = 0.0;
                      for (int n = 0; n <= top; ++n) {
                        const double eps = epsilon_n(A0, n);
                        for (auto es : {EnergySign::Plus, EnergySign::Minus}) {
                          const double E = dirac_energy(eps, params, es);
                          if (std::abs(E + mc2) <= 4.0 * std::numeric_limits<double>::epsilon() * (std::abs(E) + mc2))
                            continue;  // ground hole state: no lower-from-upper ratio
                          for (double s : {1.0, -1.0}) {
                            const double weyl = s * std::sqrt(eps) / params.R;
                            const double r = spinor_ratio(E, weyl, params, RatioDirection::LowerFromUpper);
                            worst = std::max(worst, std::abs(r * r - (E - mc2) / (E + mc2)));
                          }
                        }
                      }
                      return worst;
                    }});

  checks.push_back({"gap_emptiness", 0.0, [=] {
                      const double mc2 = params.rest_energy();
                      double worst = 0.0;
                      for (int n = 0; n <= top; ++n) {
                        for (const auto& s : dirac_solutions(radial_eigenpair(A0, lambda, n), params))
                          worst = std::max(worst, mc2 - std::abs(s.energy()));
                      }
                      return worst;
                    }});

  checks.push_back({"dirac_coupled_equations", 1e-12, [=] {
                      double worst = 0.0;
                      for (int n = 0; n <= top; ++n) {
                        for (const auto& s : dirac_solutions(radial_eigenpair(A0, lambda, n), params))
                          worst = std::max(worst, coupled_equation_residual(s, params));
                      }
                      return worst;
                    }});

  return checks;
}

CheckResult run_check(const Check& check) {
  const auto start = std::chrono::steady_clock::now();
  double measured = std::numeric_limits<double>::infinity();
  try {
    measured = check.measure();
  } catch (const std::exception&) {
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  const bool pass = std::isfinite(measured) && measured <= check.tolerance;
  return {check.name, check.tolerance, measured, pass, elapsed.count()};
}

}  // namespace

bool VerifyReport::pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

unsigned verify_concurrency() {
  unsigned n = 0;
  if (const char* env = std::getenv("HYPERLANDAU_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) n = static_cast<unsigned>(v);
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

VerifyReport cmd_verify(const RunConfig& config) {
  const auto checks = build_checks(config);
  std::vector<CheckResult> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) results[i] = run_check(checks[i]);
  };
  const unsigned count = std::min<unsigned>(verify_concurrency(), static_cast<unsigned>(checks.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return {std::move(results)};
}

nlohmann::ordered_json report_json(const VerifyReport& report, const nlohmann::ordered_json& params) {
  nlohmann::ordered_json doc;
  doc["params"] = params;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json r;
    r["name"] = c.name;
    r["tolerance"] = c.tolerance;
    r["measured"] = std::isfinite(c.measured) ? nlohmann::ordered_json(c.measured) : nlohmann::ordered_json(nullptr);
    r["pass"] = c.pass;
    r["seconds"] = c.seconds;
    doc["rows"].push_back(std::move(r));
  }
  doc["pass"] = report.pass();
  return doc;
}

void write_csv(std::ostream& os, const VerifyReport& report) {
  os << "name,tolerance,measured,pass,seconds\n";
  for (const auto& c : report.checks) {
    os << c.name << ',' << format_number(c.tolerance) << ',';
    if (std::isfinite(c.measured)) os << format_number(c.measured);
    os << ',' << (c.pass ? "true" : "false") << ',' << format_number(c.seconds) << '\n';
  }
}

}  // namespace hyperlandau::cli
