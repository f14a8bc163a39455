#ifndef HYPERLANDAU_CLI_CLI_HPP
#define HYPERLANDAU_CLI_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlandau/dirac.hpp"
#include "hyperlandau/model.hpp"

namespace hyperlandau::cli {

enum class Command { Spectrum, Wavefunction, Spinor, Verify, Figure };
enum class Model { Weyl, Dirac };
enum class Format { Json, Csv };
enum class FigureKind { Potentials, Levels };

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 1;
inline constexpr int exit_verification = 2;

struct RunConfig {
  Command command = Command::Spectrum;
  double A0 = 5.0;
  int two_lambda = 14;
  std::optional<int> n;
  double mass = 1.0;
  double R = 1.0;
  Model model = Model::Weyl;
  std::optional<double> u_min;
  std::optional<double> u_max;
  std::optional<std::size_t> points;
  Format format = Format::Csv;
  std::optional<std::filesystem::path> out;
  Frame frame = Frame::Rotation;
  FigureKind figure = FigureKind::Levels;
  EnergySign sign = EnergySign::Plus;
  std::optional<Branch> branch;
  double phi = 0.0;
  bool inject_fault = false;

  SystemParams system() const;
  QuantumNumbers quantum_numbers() const;
  /// Throws Error(InvalidParameter) carrying every Error-severity violation.
  void validate() const;
  nlohmann::ordered_json params_json() const;
};

/// A rectangular numeric table. Empty cells are std::nullopt.
struct Table {
  using Cell = std::optional<double>;

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

/// 17 significant digits, '.' decimal separator, LF line endings.
std::string format_number(double v);
void write_csv(std::ostream& os, const Table& t);
nlohmann::ordered_json table_json(const Table& t, const nlohmann::ordered_json& params);
/// Inverse of table_json for the rows part.
Table table_from_json(const nlohmann::ordered_json& doc);
void write_table(std::ostream& os, const Table& t, const RunConfig& config);

Table cmd_spectrum(const RunConfig& config);
Table cmd_wavefunction(const RunConfig& config);
Table cmd_spinor(const RunConfig& config);

struct FigureFile {
  std::string name;
  Table table;
};
/// potentials: potentials (u, V1, V2) and level_lines (n, epsilon);
/// levels: one table (n, sign, E_weyl, E_dirac).
std::vector<FigureFile> cmd_figure(const RunConfig& config);

struct CheckResult {
  std::string name;
  double tolerance;
  double measured;
  bool pass;
  double seconds;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool pass() const noexcept;
};

/// HYPERLANDAU_THREADS, with 0 or unset meaning hardware concurrency.
unsigned verify_concurrency();
VerifyReport cmd_verify(const RunConfig& config);
nlohmann::ordered_json report_json(const VerifyReport& report, const nlohmann::ordered_json& params);
void write_csv(std::ostream& os, const VerifyReport& report);

/// Parses argv, runs the command, writes results. Returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperlandau::cli

#endif  // HYPERLANDAU_CLI_CLI_HPP
