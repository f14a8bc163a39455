#ifndef HYPERLANDAU_MODEL_HPP
#define HYPERLANDAU_MODEL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hyperlandau/error.hpp"

namespace hyperlandau {

/// Physical constants and geometry. Formulas keep every constant symbolic;
/// the defaults are natural units with a unit-mass particle.
struct SystemParams {
  double hbar = 1.0;
  double c = 1.0;
  double v_F = 1.0;
  double e_charge = 1.0;
  double R = 1.0;     ///< hyperboloid pseudo-radius
  double mass = 1.0;  ///< 0 selects the massless (Dirac-Weyl) limit

  /// m c^2
  double rest_energy() const noexcept { return mass * c * c; }

  /// Throws Error(InvalidParameter) unless all constants are positive and mass >= 0.
  void check() const;
};

/// Dimensionless intensity A0 of the constant perpendicular field.
struct FieldConfig {
  double A0 = 5.0;

  /// B0 = A0 c hbar / e
  double B0(const SystemParams& p) const noexcept { return A0 * p.c * p.hbar / p.e_charge; }
  /// Field component normal to the surface, -B0 / R^2.
  double field(const SystemParams& p) const noexcept { return -B0(p) / (p.R * p.R); }
};

/// Total angular momentum lambda = two_lambda / 2 and level index n.
struct QuantumNumbers {
  int two_lambda = 14;
  int n = 0;

  double lambda() const noexcept { return 0.5 * two_lambda; }
  bool half_odd() const noexcept { return two_lambda % 2 != 0; }
};

/// Largest admissible level index: floor(A0), or A0 - 1 when A0 is an integer.
/// The result is always strictly below A0.
int max_level(double A0);

enum class ViolationCode {
  InvalidSystemParams,
  NonPositiveA0,
  LambdaTooSmall,
  LevelOutOfRange,
  NonHalfOddLambda,
};

enum class Severity { Warning, Error };

std::string_view to_string(ViolationCode code) noexcept;

struct Violation {
  ViolationCode code;
  Severity severity;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  /// True when no violation has Error severity.
  bool passed() const noexcept;
  bool has(ViolationCode code) const noexcept;
};

/// Collects every violated admissibility condition without throwing.
ValidationReport validate(const SystemParams& params, const FieldConfig& field,
                          const QuantumNumbers& qn);

struct Point3 {
  double x;
  double y;
  double z;
};

/// Upper-sheet point of x^2 + y^2 - z^2 = -R^2 at hyperbolic coordinates (u, phi).
Point3 embed(double u, double phi, double R) noexcept;

}  // namespace hyperlandau

#endif  // HYPERLANDAU_MODEL_HPP
