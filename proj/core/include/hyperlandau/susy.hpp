#ifndef HYPERLANDAU_SUSY_HPP
#define HYPERLANDAU_SUSY_HPP

#include <functional>
#include <span>
#include <variant>

#include "hyperlandau/grid.hpp"

namespace hyperlandau {

/// W(u) = A0 coth u - lambda cosech u, the constant-field superpotential.
struct ConstantField {
  double A0;
  double lambda;
};

/// A user-supplied superpotential together with its exact derivative.
struct CustomSuperpotential {
  std::function<double(double)> w;
  std::function<double(double)> w_prime;
};

/// Generator of the ladder operators L(+/-) = -/+ d/du + W(u).
class Superpotential {
 public:
  using Kind = std::variant<ConstantField, CustomSuperpotential>;

  static Superpotential constant_field(double A0, double lambda);

  /// Rejects (InvalidSuperpotential) a derivative that disagrees with the
  /// centered difference of `w` beyond its O(h^2) truncation error.
  static Superpotential custom(std::function<double(double)> w,
                               std::function<double(double)> w_prime);

  double operator()(double u) const;
  double derivative(double u) const;

  const Kind& kind() const noexcept { return kind_; }

 private:
  explicit Superpotential(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

/// Worst centered-difference mismatch |(w(u+h) - w(u-h))/2h - w'(u)| over `points`.
double derivative_consistency_error(const std::function<double(double)>& w,
                                    const std::function<double(double)>& w_prime,
                                    std::span<const double> points, double h);

/// Constant-field superpotential; throws DomainError for u <= 0.
double superpotential_constant_field(double A0, double lambda, double u);

/// V1 = W^2 - W' and V2 = W^2 + W'.
class PartnerPotentials {
 public:
  explicit PartnerPotentials(Superpotential w) : w_(std::move(w)) {}

  double v1(double u) const;
  double v2(double u) const;
  /// Limit of both potentials as u -> infinity: A0^2 for the constant field,
  /// W(40)^2 for custom superpotentials.
  double asymptote() const;

  const Superpotential& superpotential() const noexcept { return w_; }

 private:
  Superpotential w_;
};

PartnerPotentials partner_potentials(const Superpotential& w);

/// Expanded constant-field potentials, independent of the W^2 -/+ W' route:
/// V1 = A0^2 + (A0^2 + lambda^2 + A0) cosech^2 u - lambda (2 A0 + 1) coth u cosech u
double v1_constant_field(double A0, double lambda, double u);
/// V2 = A0^2 + (A0^2 + lambda^2 - A0) cosech^2 u - lambda (2 A0 - 1) coth u cosech u
double v2_constant_field(double A0, double lambda, double u);

/// V2(u; A0 + 1) - V1(u; A0) - (2 A0 + 1); identically zero.
double shape_invariance_residual(double A0, double lambda, double u);

enum class LadderDirection {
  Lower,  ///< L- = +d/du + W
  Raise,  ///< L+ = -d/du + W
};

SampledFunction ladder_apply(LadderDirection direction, const Superpotential& w,
                             const SampledFunction& f);

/// Sampled H f = -f'' + V f for the partner Hamiltonian of the given index (1 or 2).
SampledFunction apply_partner_hamiltonian(int index, const Superpotential& w,
                                          const SampledFunction& f);

/// ||(H2 L- - L- H1) f|| / ||f|| with all derivatives by finite differences.
/// `f` should vanish near both grid ends; returns 0 for f = 0.
double intertwining_residual(const Superpotential& w, const SampledFunction& f);

/// ||L+ L- f - H1 f|| / ||f|| (index 1) or ||L- L+ f - H2 f|| / ||f|| (index 2).
double factorization_residual(int index, const Superpotential& w, const SampledFunction& f);

}  // namespace hyperlandau

#endif  // HYPERLANDAU_SUSY_HPP
