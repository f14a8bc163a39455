#include "hyperlandau/susy.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace hyperlandau {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive_u(double u) {
  if (!(u > 0.0)) throw Error(ErrorCode::DomainError, "superpotential is singular for u <= 0");
}

double constant_field_derivative(double A0, double lambda, double u) {
  require_positive_u(u);
  const double csch = 1.0 / std::sinh(u);
  const double coth = 1.0 / std::tanh(u);
  return -A0 * csch * csch + lambda * coth * csch;
}

}  // namespace

double superpotential_constant_field(double A0, double lambda, double u) {
  require_positive_u(u);
  return A0 / std::tanh(u) - lambda / std::sinh(u);
}

Superpotential Superpotential::constant_field(double A0, double lambda) {
  if (!std::isfinite(A0) || !std::isfinite(lambda))
    throw Error(ErrorCode::InvalidParameter, "superpotential parameters must be finite");
  return Superpotential(ConstantField{A0, lambda});
}

double derivative_consistency_error(const std::function<double(double)>& w,
                                    const std::function<double(double)>& w_prime,
                                    std::span<const double> points, double h) {
  double worst = 0.0;
  for (double u : points) {
    const double fd = (w(u + h) - w(u - h)) / (2.0 * h);
    worst = std::max(worst, std::abs(fd - w_prime(u)));
  }
  return worst;
}

Superpotential Superpotential::custom(std::function<double(double)> w,
                                      std::function<double(double)> w_prime) {
  if (!w || !w_prime) throw Error(ErrorCode::InvalidSuperpotential, "both W and W' are required");

  // Halving h must shrink a truncation-dominated mismatch by ~4; a wrong W'
  // leaves an h-independent floor. Accept either a tiny error or O(h^2) decay.
  static constexpr std::array<double, 6> probes{0.3, 0.7, 1.3, 2.1, 3.4, 5.5};
  for (double u : probes) {
    const std::array<double, 1> at{u};
    const double coarse = derivative_consistency_error(w, w_prime, at, 1e-3);
    const double fine = derivative_consistency_error(w, w_prime, at, 5e-4);
    const double scale = 1.0 + std::abs(w_prime(u));
    const bool tiny = fine <= 1e-6 * scale;
    const bool quadratic = fine <= 0.3 * coarse;
    if (!(std::isfinite(fine) && (tiny || quadratic))) {
      std::ostringstream os;
      os << "W' inconsistent with W at u = " << u << " (mismatch " << fine << ")";
      throw Error(ErrorCode::InvalidSuperpotential, os.str());
    }
  }
  return Superpotential(CustomSuperpotential{std::move(w), std::move(w_prime)});
}

double Superpotential::operator()(double u) const {
  return std::visit(overloaded{
                        [u](const ConstantField& k) { return superpotential_constant_field(k.A0, k.lambda, u); },
                        [u](const CustomSuperpotential& k) { return k.w(u); },
                    },
                    kind_);
}

double Superpotential::derivative(double u) const {
  return std::visit(overloaded{
                        [u](const ConstantField& k) { return constant_field_derivative(k.A0, k.lambda, u); },
                        [u](const CustomSuperpotential& k) { return k.w_prime(u); },
                    },
                    kind_);
}

double PartnerPotentials::v1(double u) const {
  const double w = w_(u);
  return w * w - w_.derivative(u);
}

double PartnerPotentials::v2(double u) const {
  const double w = w_(u);
  return w * w + w_.derivative(u);
}

double PartnerPotentials::asymptote() const {
  if (const auto* k = std::get_if<ConstantField>(&w_.kind())) return k->A0 * k->A0;
  const double w = w_(40.0);
  return w * w;
}

PartnerPotentials partner_potentials(const Superpotential& w) { return PartnerPotentials(w); }

double v1_constant_field(double A0, double lambda, double u) {
  require_positive_u(u);
  const double csch = 1.0 / std::sinh(u);
  const double coth = 1.0 / std::tanh(u);
  return A0 * A0 + (A0 * A0 + lambda * lambda + A0) * csch * csch -
         lambda * (2.0 * A0 + 1.0) * coth * csch;
}

double v2_constant_field(double A0, double lambda, double u) {
  require_positive_u(u);
  const double csch = 1.0 / std::sinh(u);
  const double coth = 1.0 / std::tanh(u);
  return A0 * A0 + (A0 * A0 + lambda * lambda - A0) * csch * csch -
         lambda * (2.0 * A0 - 1.0) * coth * csch;
}

double shape_invariance_residual(double A0, double lambda, double u) {
  const auto shifted = partner_potentials(Superpotential::constant_field(A0 + 1.0, lambda));
  const auto base = partner_potentials(Superpotential::constant_field(A0, lambda));
  return shifted.v2(u) - base.v1(u) - (2.0 * A0 + 1.0);
}

SampledFunction ladder_apply(LadderDirection direction, const Superpotential& w,
                             const SampledFunction& f) {
  const auto df = derivative(f);
  const auto& grid = f.grid();
  const double sign = direction == LadderDirection::Lower ? 1.0 : -1.0;
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = sign * df[i] + w(grid.node(i)) * f[i];
  return SampledFunction(grid, std::move(out));
}

SampledFunction apply_partner_hamiltonian(int index, const Superpotential& w,
                                          const SampledFunction& f) {
  if (index != 1 && index != 2)
    throw Error(ErrorCode::InvalidParameter, "partner Hamiltonian index must be 1 or 2");
  const auto potentials = partner_potentials(w);
  const auto d2 = second_derivative(f);
  const auto& grid = f.grid();
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double u = grid.node(i);
    const double v = index == 1 ? potentials.v1(u) : potentials.v2(u);
    out[i] = -d2[i] + v * f[i];
  }
  return SampledFunction(grid, std::move(out));
}

namespace {

double relative_to(const SampledFunction& residual, const SampledFunction& f) {
  const double norm = l2_norm(f);
  return norm == 0.0 ? 0.0 : l2_norm(residual) / norm;
}

}  // namespace

double intertwining_residual(const Superpotential& w, const SampledFunction& f) {
  const auto lowered = ladder_apply(LadderDirection::Lower, w, f);
  const auto lhs = apply_partner_hamiltonian(2, w, lowered);
  const auto rhs = ladder_apply(LadderDirection::Lower, w, apply_partner_hamiltonian(1, w, f));
  return relative_to(lhs - rhs, f);
}

double factorization_residual(int index, const Superpotential& w, const SampledFunction& f) {
  const auto product =
      index == 1 ? ladder_apply(LadderDirection::Raise, w, ladder_apply(LadderDirection::Lower, w, f))
                 : ladder_apply(LadderDirection::Lower, w, ladder_apply(LadderDirection::Raise, w, f));
  return relative_to(product - apply_partner_hamiltonian(index, w, f), f);
}

}  // namespace hyperlandau
