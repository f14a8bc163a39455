#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "hyperlandau_cli/cli.hpp"

namespace hyperlandau::cli {

namespace {

void add_common_options(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--a0", cfg.A0, "field intensity A0")->capture_default_str();
  sub.add_option("--lambda2", cfg.two_lambda, "twice the angular momentum lambda")->capture_default_str();
  sub.add_option_function<int>("--n", [&cfg](int n) { cfg.n = n; }, "level index");
  sub.add_option("--mass", cfg.mass, "particle mass")->capture_default_str();
  sub.add_option("--radius", cfg.R, "hyperboloid radius R")->capture_default_str();
  sub.add_option("--model", cfg.model, "weyl or dirac")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Model>{{"weyl", Model::Weyl}, {"dirac", Model::Dirac}},
                                          CLI::ignore_case));
  sub.add_option_function<double>("--umin", [&cfg](double v) { cfg.u_min = v; }, "grid start");
  sub.add_option_function<double>("--umax", [&cfg](double v) { cfg.u_max = v; }, "grid end");
  sub.add_option_function<std::size_t>("--points", [&cfg](std::size_t v) { cfg.points = v; }, "grid points");
  sub.add_option("--format", cfg.format, "json or csv")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"csv", Format::Csv}},
                                          CLI::ignore_case));
  sub.add_option_function<std::string>("--out", [&cfg](const std::string& p) { cfg.out = p; },
                                       "output file (directory for figure)");
  sub.add_option_function<std::string>(
         "--frame",
         [&cfg](const std::string& f) { cfg.frame = f == "hyperbolic" ? Frame::Hyperbolic : Frame::Rotation; },
         "rotation or hyperbolic")
      ->check(CLI::IsMember({"rotation", "hyperbolic"}));
}

void emit_error(std::ostream& err, std::string_view code, const std::string& message) {
  nlohmann::ordered_json e;
  e["error"]["code"] = code;
  e["error"]["message"] = message;
  err << e.dump() << '\n';
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorCode::InvalidParameter, "cannot open " + path.string() + " for writing");
  return os;
}

template <class Write>
void emit(const RunConfig& cfg, std::ostream& out, Write&& write) {
  if (!cfg.out) {
    write(out);
    return;
  }
  auto os = open_output(*cfg.out);
  write(os);
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const auto report = hyperlandau::validate(cfg.system(), FieldConfig{cfg.A0}, cfg.quantum_numbers());
  for (const auto& v : report.violations) {
    nlohmann::ordered_json w;
    w["warning"]["code"] = to_string(v.code);
    w["warning"]["message"] = v.message;
    err << w.dump() << '\n';
  }

  switch (cfg.command) {
    case Command::Spectrum:
    case Command::Wavefunction:
    case Command::Spinor: {
      const Table t = cfg.command == Command::Spectrum       ? cmd_spectrum(cfg)
                      : cfg.command == Command::Wavefunction ? cmd_wavefunction(cfg)
                                                             : cmd_spinor(cfg);
      emit(cfg, out, [&](std::ostream& os) { write_table(os, t, cfg); });
      return exit_ok;
    }
    case Command::Figure: {
      const auto files = cmd_figure(cfg);
      if (!cfg.out) {
        if (files.size() != 1)
          throw Error(ErrorCode::InvalidParameter, "figure potentials writes several files; pass --out DIR");
        write_table(out, files.front().table, cfg);
        return exit_ok;
      }
      std::filesystem::create_directories(*cfg.out);
      const char* ext = cfg.format == Format::Csv ? ".csv" : ".json";
      for (const auto& f : files) {
        auto os = open_output(*cfg.out / (f.name + ext));
        write_table(os, f.table, cfg);
      }
      return exit_ok;
    }
    case Command::Verify: {
      const auto result = cmd_verify(cfg);
      emit(cfg, out, [&](std::ostream& os) {
        if (cfg.format == Format::Csv)
          write_csv(os, result);
        else
          os << report_json(result, cfg.params_json()).dump(2) << '\n';
      });
      return result.pass() ? exit_ok : exit_verification;
    }
  }
  return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Landau levels of Dirac fermions on a hyperboloid", "hyperlandau"};
  app.require_subcommand(1);

  auto* spectrum = app.add_subcommand("spectrum", "table of n, epsilon, E_plus, E_minus");
  auto* wavefunction = app.add_subcommand("wavefunction", "normalized radial functions u, g1, g2");
  auto* spinor = app.add_subcommand("spinor", "spinor components on the grid at fixed phi");
  auto* verify = app.add_subcommand("verify", "run the cross-check suite");
  auto* figure = app.add_subcommand("figure", "plot data for the potentials or the energy levels");
  for (auto* sub : {spectrum, wavefunction, spinor, verify, figure}) add_common_options(*sub, cfg);

  spinor->add_option("--sign", cfg.sign, "plus or minus")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, EnergySign>{{"plus", EnergySign::Plus}, {"minus", EnergySign::Minus}},
          CLI::ignore_case));
  spinor
      ->add_option_function<std::string>(
          "--branch",
          [&cfg](const std::string& name) {
            for (auto b : {Branch::ParticlePlus, Branch::ParticleMinus, Branch::HolePlus, Branch::HoleMinus,
                           Branch::GroundPlus, Branch::GroundMinus})
              if (to_string(b) == name) cfg.branch = b;
          },
          "dirac branch")
      ->check(CLI::IsMember(
          {"particle-plus", "particle-minus", "hole-plus", "hole-minus", "ground-plus", "ground-minus"}));
  spinor->add_option("--phi", cfg.phi, "azimuthal angle")->capture_default_str();
  verify->add_flag("--inject-fault", cfg.inject_fault, "perturb epsilon_1 by 1e-2 (self-test)")->group("");
  figure->add_option("which", cfg.figure, "potentials or levels")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, FigureKind>{{"potentials", FigureKind::Potentials}, {"levels", FigureKind::Levels}},
          CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    emit_error(err, "UsageError", e.what());
    return exit_validation;
  }

  if (*spectrum) cfg.command = Command::Spectrum;
  if (*wavefunction) cfg.command = Command::Wavefunction;
  if (*spinor) cfg.command = Command::Spinor;
  if (*verify) cfg.command = Command::Verify;
  if (*figure) cfg.command = Command::Figure;

  try {
    return execute(cfg, out, err);
  } catch (const Error& e) {
    emit_error(err, to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    emit_error(err, "IOError", e.what());
  }
  return exit_validation;
}

}  // namespace hyperlandau::cli
