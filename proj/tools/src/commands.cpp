#include <cmath>
#include <string>

#include "hyperlandau/analytic.hpp"
#include "hyperlandau/grid.hpp"
#include "hyperlandau/susy.hpp"
#include "hyperlandau_cli/cli.hpp"

namespace hyperlandau::cli {

namespace {

std::string_view to_string(Model m) { return m == Model::Weyl ? "weyl" : "dirac"; }

Grid sampling_grid(const RunConfig& config, double u_min, double u_max, std::size_t points) {
  return Grid(config.u_min.value_or(u_min), config.u_max.value_or(u_max), config.points.value_or(points));
}

Grid radial_grid(const RunConfig& config, int n) {
  return sampling_grid(config, 1e-6, normalization_cutoff(config.A0, n), 20001);
}

Branch default_branch(const RunConfig& config, int n) {
  if (config.branch) return *config.branch;
  const bool plus = config.sign == EnergySign::Plus;
  if (n == 0) return plus ? Branch::GroundPlus : Branch::GroundMinus;
  return plus ? Branch::ParticlePlus : Branch::ParticleMinus;
}

void push_complex(std::vector<Table::Cell>& row, std::complex<double> z) {
  row.emplace_back(z.real());
  row.emplace_back(z.imag());
}

}  // namespace

SystemParams RunConfig::system() const {
  SystemParams p;
  p.R = R;
  p.mass = mass;
  return p;
}

QuantumNumbers RunConfig::quantum_numbers() const { return {two_lambda, n.value_or(0)}; }

void RunConfig::validate() const {
  const auto report = hyperlandau::validate(system(), FieldConfig{A0}, quantum_numbers());
  if (report.passed()) return;
  std::string message;
  ErrorCode code = ErrorCode::InvalidParameter;
  for (const auto& v : report.violations) {
    if (v.severity != Severity::Error) continue;
    if (!message.empty()) message += "; ";
    message += v.message;
    if (v.code == ViolationCode::LevelOutOfRange) code = ErrorCode::LevelOutOfRange;
  }
  throw Error(code, message);
}

nlohmann::ordered_json RunConfig::params_json() const {
  nlohmann::ordered_json p;
  p["A0"] = A0;
  p["two_lambda"] = two_lambda;
  p["lambda"] = 0.5 * two_lambda;
  p["n"] = n ? nlohmann::ordered_json(*n) : nlohmann::ordered_json(nullptr);
  p["mass"] = mass;
  p["R"] = R;
  p["model"] = to_string(model);
  p["frame"] = hyperlandau::to_string(frame);
  if (u_min) p["u_min"] = *u_min;
  if (u_max) p["u_max"] = *u_max;
  if (points) p["points"] = *points;
  return p;
}

Table cmd_spectrum(const RunConfig& config) {
  const auto params = config.system();
  Table t{{"n", "epsilon", "E_plus", "E_minus"}, {}};
  for (int n = 0; n <= max_level(config.A0); ++n) {
    const double eps = epsilon_n(config.A0, n);
    double plus, minus;
    if (config.model == Model::Weyl) {
      const auto e = weyl_energies(config.A0, params.R, params.v_F, params.hbar, n);
      plus = e.plus;
      minus = e.minus;
    } else {
      plus = dirac_energy(eps, params, EnergySign::Plus);
      minus = dirac_energy(eps, params, EnergySign::Minus);
    }
    t.add({double(n), eps, plus, minus});
  }
  return t;
}

Table cmd_wavefunction(const RunConfig& config) {
  const int n = config.n.value_or(0);
  const auto pair = radial_eigenpair(config.A0, 0.5 * config.two_lambda, n);
  const Grid grid = radial_grid(config, n);
  Table t{{"u", "g1", "g2"}, {}};
  for (std::size_t i = 0; i < grid.count(); ++i) {
    const double u = grid.node(i);
    t.add({u, pair.g1(u), pair.g2 ? Table::Cell((*pair.g2)(u)) : Table::Cell{}});
  }
  return t;
}

Table cmd_spinor(const RunConfig& config) {
  const int n = config.n.value_or(0);
  const auto pair = radial_eigenpair(config.A0, 0.5 * config.two_lambda, n);
  const Grid grid = radial_grid(config, n);
  Table t;
  if (config.model == Model::Weyl) {
    const auto spinor = assemble_weyl_spinor(pair, config.sign, config.frame);
    t.columns = {"u", "re_psi1", "im_psi1", "re_psi2", "im_psi2"};
    for (std::size_t i = 0; i < grid.count(); ++i) {
      const double u = grid.node(i);
      const auto s = spinor(u, config.phi);
      std::vector<Table::Cell> row{u};
      for (const auto& z : s) push_complex(row, z);
      t.add(std::move(row));
    }
    return t;
  }

  const auto params = config.system();
  const Branch branch = default_branch(config, n);
  const auto plus = assemble_weyl_spinor(pair, EnergySign::Plus, config.frame);
  const auto minus = assemble_weyl_spinor(pair, EnergySign::Minus, config.frame);
  const auto solution = assemble_dirac_solution(plus, minus, params, branch);
  t.columns = {"u", "re_psi1", "im_psi1", "re_psi2", "im_psi2", "re_psi3", "im_psi3", "re_psi4", "im_psi4"};
  for (std::size_t i = 0; i < grid.count(); ++i) {
    const double u = grid.node(i);
    const auto s = solution(u, config.phi);
    std::vector<Table::Cell> row{u};
    for (const auto& z : s) push_complex(row, z);
    t.add(std::move(row));
  }
  return t;
}

std::vector<FigureFile> cmd_figure(const RunConfig& config) {
  const double lambda = 0.5 * config.two_lambda;
  const int top = max_level(config.A0);
  std::vector<FigureFile> files;

  if (config.figure == FigureKind::Potentials) {
    const Grid grid = sampling_grid(config, 0.1, 6.0, 600);
    Table potentials{{"u", "V1", "V2"}, {}};
    for (std::size_t i = 0; i < grid.count(); ++i) {
      const double u = grid.node(i);
      potentials.add({u, v1_constant_field(config.A0, lambda, u), v2_constant_field(config.A0, lambda, u)});
    }
    Table lines{{"n", "epsilon"}, {}};
    for (int n = 0; n <= top; ++n) lines.add({double(n), epsilon_n(config.A0, n)});
    files.push_back({"potentials", std::move(potentials)});
    files.push_back({"level_lines", std::move(lines)});
    return files;
  }

  const auto params = config.system();
  Table levels{{"n", "sign", "E_weyl", "E_dirac"}, {}};
  for (int n = 0; n <= top; ++n) {
    const double eps = epsilon_n(config.A0, n);
    const auto weyl = weyl_energies(config.A0, params.R, params.v_F, params.hbar, n);
    levels.add({double(n), 1.0, weyl.plus, dirac_energy(eps, params, EnergySign::Plus)});
    // The massless zero mode is a single state; only the Dirac column has a partner.
    levels.add({double(n), -1.0, n == 0 ? Table::Cell{} : Table::Cell(weyl.minus),
                dirac_energy(eps, params, EnergySign::Minus)});
  }
  files.push_back({"levels", std::move(levels)});
  return files;
}

}  // namespace hyperlandau::cli
