#ifndef HYPERLANDAU_DIRAC_HPP
#define HYPERLANDAU_DIRAC_HPP

#include <array>
#include <complex>
#include <string_view>
#include <vector>

#include "hyperlandau/analytic.hpp"
#include "hyperlandau/model.hpp"

namespace hyperlandau {

enum class EnergySign { Plus, Minus };

/// Frame factor relating the reduced radial pair to the surface spinor.
enum class Frame {
  Rotation,    ///< exp(-i u sigma_y / 2), unitary
  Hyperbolic,  ///< exp(-sigma_y u / 2), not norm-preserving
};

enum class Branch { ParticlePlus, ParticleMinus, HolePlus, HoleMinus, GroundPlus, GroundMinus };

std::string_view to_string(Branch b) noexcept;
std::string_view to_string(Frame f) noexcept;

using Spinor2 = std::array<std::complex<double>, 2>;
using Spinor4 = std::array<std::complex<double>, 4>;

/// Two-component Dirac-Weyl eigenspinor on the surface:
///   N F(u) / sqrt(sinh u) * (+/- g1(u) e^{i(lambda-1/2)phi}, i g2(u) e^{i(lambda+1/2)phi}).
/// N = 1/sqrt(2) when both radial components are present and 1 for the zero mode.
class WeylSpinor {
 public:
  WeylSpinor(RadialEigenpair radial, EnergySign sign, Frame frame);

  Spinor2 operator()(double u, double phi) const;

  EnergySign sign() const noexcept { return sign_; }
  Frame frame() const noexcept { return frame_; }
  int n() const noexcept { return radial_.n; }
  double lambda() const noexcept { return radial_.lambda; }
  const RadialEigenpair& radial() const noexcept { return radial_; }
  double norm_constant() const noexcept;

  /// R * (Dirac-Weyl eigenvalue): +/- sqrt(eps_n).
  double scaled_eigenvalue() const noexcept;

 private:
  RadialEigenpair radial_;
  EnergySign sign_;
  Frame frame_;
};

WeylSpinor assemble_weyl_spinor(const RadialEigenpair& radial, EnergySign sign,
                                Frame frame = Frame::Rotation);

/// +/- sqrt(c^2 hbar^2 eps / R^2 + m^2 c^4).
double dirac_energy(double epsilon, const SystemParams& params, EnergySign sign);

enum class RatioDirection {
  LowerFromUpper,  ///< chi = c hbar E_w / (E + m c^2) phi
  UpperFromLower,  ///< phi = c hbar E_w / (E - m c^2) chi
};

/// Scalar linking the two halves of a Dirac four-spinor. `weyl_energy` is the
/// signed Dirac-Weyl eigenvalue (units of inverse length). Throws
/// DegenerateDenominator when E = -m c^2 (LowerFromUpper) or E = +m c^2
/// (UpperFromLower).
double spinor_ratio(double energy, double weyl_energy, const SystemParams& params,
                    RatioDirection direction);

/// Four-spinor (upper_coeff * base, lower_coeff * base) with energy E.
class DiracSolution {
 public:
  DiracSolution(WeylSpinor base, Branch branch, double energy, double weyl_energy,
                double upper_coeff, double lower_coeff, double ratio)
      : base_(std::move(base)), branch_(branch), energy_(energy), weyl_energy_(weyl_energy),
        upper_coeff_(upper_coeff), lower_coeff_(lower_coeff), ratio_(ratio) {}

  Spinor4 operator()(double u, double phi) const;

  double energy() const noexcept { return energy_; }
  Branch branch() const noexcept { return branch_; }
  double weyl_energy() const noexcept { return weyl_energy_; }
  double ratio() const noexcept { return ratio_; }
  double upper_coeff() const noexcept { return upper_coeff_; }
  double lower_coeff() const noexcept { return lower_coeff_; }
  const WeylSpinor& base() const noexcept { return base_; }

  bool is_ground() const noexcept {
    return branch_ == Branch::GroundPlus || branch_ == Branch::GroundMinus;
  }

 private:
  WeylSpinor base_;
  Branch branch_;
  double energy_;
  double weyl_energy_;
  double upper_coeff_;
  double lower_coeff_;
  double ratio_;
};

/// Builds one particle, hole or ground solution from the +/- Dirac-Weyl spinors
/// of a level. Ground branches exist only for n = 0 and are the only ones there.
DiracSolution assemble_dirac_solution(const WeylSpinor& weyl_plus, const WeylSpinor& weyl_minus,
                                      const SystemParams& params, Branch branch);

/// Every solution of a level: two ground solutions for n = 0, four otherwise.
std::vector<DiracSolution> dirac_solutions(const RadialEigenpair& radial, const SystemParams& params,
                                           Frame frame = Frame::Rotation);

/// Largest mismatch in the coupled first-order equations
///   D chi = (E - m c^2)/(c hbar) phi,   D phi = (E + m c^2)/(c hbar) chi,
/// where D acts on the base Weyl spinor by its eigenvalue. Scaled by
/// 1 + |E|/(c hbar).
double coupled_equation_residual(const DiracSolution& solution, const SystemParams& params);

}  // namespace hyperlandau

#endif  // HYPERLANDAU_DIRAC_HPP
