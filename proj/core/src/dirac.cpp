#include "hyperlandau/dirac.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hyperlandau {

std::string_view to_string(Branch b) noexcept {
  switch (b) {
    case Branch::ParticlePlus: return "particle-plus";
    case Branch::ParticleMinus: return "particle-minus";
    case Branch::HolePlus: return "hole-plus";
    case Branch::HoleMinus: return "hole-minus";
    case Branch::GroundPlus: return "ground-plus";
    case Branch::GroundMinus: return "ground-minus";
  }
  return "unknown";
}

std::string_view to_string(Frame f) noexcept {
  return f == Frame::Rotation ? "rotation" : "hyperbolic";
}

WeylSpinor::WeylSpinor(RadialEigenpair radial, EnergySign sign, Frame frame)
    : radial_(std::move(radial)), sign_(sign), frame_(frame) {}

WeylSpinor assemble_weyl_spinor(const RadialEigenpair& radial, EnergySign sign, Frame frame) {
  return WeylSpinor(radial, sign, frame);
}

double WeylSpinor::norm_constant() const noexcept {
  return radial_.g2 ? std::numbers::sqrt2 / 2.0 : 1.0;
}

double WeylSpinor::scaled_eigenvalue() const noexcept {
  const double root = std::sqrt(radial_.epsilon);
  return sign_ == EnergySign::Plus ? root : -root;
}

Spinor2 WeylSpinor::operator()(double u, double phi) const {
  using namespace std::complex_literals;
  if (!(u > 0.0)) throw Error(ErrorCode::DomainError, "spinor is defined for u > 0");

  const double lambda = radial_.lambda;
  const double pm = sign_ == EnergySign::Plus ? 1.0 : -1.0;
  const std::complex<double> top = pm * radial_.g1(u) * std::polar(1.0, (lambda - 0.5) * phi);
  const std::complex<double> bottom =
      radial_.g2 ? 1i * (*radial_.g2)(u) * std::polar(1.0, (lambda + 0.5) * phi) : 0.0;

  const double pref = norm_constant() / std::sqrt(std::sinh(u));
  if (frame_ == Frame::Rotation) {
    const double c = std::cos(0.5 * u);
    const double s = std::sin(0.5 * u);
    return {pref * (c * top - s * bottom), pref * (s * top + c * bottom)};
  }
  const double ch = std::cosh(0.5 * u);
  const double sh = std::sinh(0.5 * u);
  return {pref * (ch * top + 1i * sh * bottom), pref * (-1i * sh * top + ch * bottom)};
}

double dirac_energy(double epsilon, const SystemParams& params, EnergySign sign) {
  if (!(epsilon >= 0.0)) throw Error(ErrorCode::InvalidParameter, "epsilon must be >= 0");
  const double chr = params.c * params.hbar / params.R;
  const double mc2 = params.rest_energy();
  const double e = std::sqrt(chr * chr * epsilon + mc2 * mc2);
  return sign == EnergySign::Plus ? e : -e;
}

double spinor_ratio(double energy, double weyl_energy, const SystemParams& params,
                    RatioDirection direction) {
  const double mc2 = params.rest_energy();
  const double denom = direction == RatioDirection::LowerFromUpper ? energy + mc2 : energy - mc2;
  const double scale = std::abs(energy) + mc2;
  if (std::abs(denom) <= 4.0 * std::numeric_limits<double>::epsilon() * scale)
    throw Error(ErrorCode::DegenerateDenominator,
                direction == RatioDirection::LowerFromUpper ? "E + m c^2 vanishes" : "E - m c^2 vanishes");
  return params.c * params.hbar * weyl_energy / denom;
}

Spinor4 DiracSolution::operator()(double u, double phi) const {
  const Spinor2 s = base_(u, phi);
  return {upper_coeff_ * s[0], upper_coeff_ * s[1], lower_coeff_ * s[0], lower_coeff_ * s[1]};
}

DiracSolution assemble_dirac_solution(const WeylSpinor& weyl_plus, const WeylSpinor& weyl_minus,
                                      const SystemParams& params, Branch branch) {
  if (weyl_plus.sign() != EnergySign::Plus || weyl_minus.sign() != EnergySign::Minus)
    throw Error(ErrorCode::BranchMismatch, "expected the (+, -) Dirac-Weyl spinors of one level");
  if (weyl_plus.n() != weyl_minus.n() || weyl_plus.lambda() != weyl_minus.lambda())
    throw Error(ErrorCode::BranchMismatch, "Dirac-Weyl spinors belong to different levels");

  const bool ground = branch == Branch::GroundPlus || branch == Branch::GroundMinus;
  if (ground != (weyl_plus.n() == 0))
    throw Error(ErrorCode::BranchMismatch,
                ground ? "ground branches require n = 0" : "n = 0 only admits ground branches");

  const double mc2 = params.rest_energy();
  const double eps = weyl_plus.radial().epsilon;
  switch (branch) {
    case Branch::GroundPlus: return DiracSolution(weyl_plus, branch, mc2, 0.0, 1.0, 0.0, 0.0);
    case Branch::GroundMinus: return DiracSolution(weyl_plus, branch, -mc2, 0.0, 0.0, 1.0, 0.0);
    default: break;
  }

  const bool particle = branch == Branch::ParticlePlus || branch == Branch::ParticleMinus;
  const bool plus = branch == Branch::ParticlePlus || branch == Branch::HolePlus;
  const WeylSpinor& base = plus ? weyl_plus : weyl_minus;
  const double weyl_energy = base.scaled_eigenvalue() / params.R;
  const double energy = dirac_energy(eps, params, particle ? EnergySign::Plus : EnergySign::Minus);
  if (particle) {
    const double r = spinor_ratio(energy, weyl_energy, params, RatioDirection::LowerFromUpper);
    return DiracSolution(base, branch, energy, weyl_energy, 1.0, r, r);
  }
  const double r = spinor_ratio(energy, weyl_energy, params, RatioDirection::UpperFromLower);
  return DiracSolution(base, branch, energy, weyl_energy, r, 1.0, r);
}

std::vector<DiracSolution> dirac_solutions(const RadialEigenpair& radial, const SystemParams& params,
                                           Frame frame) {
  const WeylSpinor plus(radial, EnergySign::Plus, frame);
  const WeylSpinor minus(radial, EnergySign::Minus, frame);
  std::vector<DiracSolution> out;
  if (radial.n == 0) {
    for (Branch b : {Branch::GroundPlus, Branch::GroundMinus})
      out.push_back(assemble_dirac_solution(plus, minus, params, b));
    return out;
  }
  for (Branch b : {Branch::ParticlePlus, Branch::ParticleMinus, Branch::HolePlus, Branch::HoleMinus})
    out.push_back(assemble_dirac_solution(plus, minus, params, b));
  return out;
}

double coupled_equation_residual(const DiracSolution& s, const SystemParams& params) {
  const double chbar = params.c * params.hbar;
  const double mc2 = params.rest_energy();
  const double e_w = s.weyl_energy();
  const double a = s.upper_coeff();
  const double b = s.lower_coeff();
  const double r41 = b * e_w - (s.energy() - mc2) / chbar * a;
  const double r42 = a * e_w - (s.energy() + mc2) / chbar * b;
  return std::max(std::abs(r41), std::abs(r42)) / (1.0 + std::abs(s.energy()) / chbar);
}

}  // namespace hyperlandau
