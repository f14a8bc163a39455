#ifndef HYPERLANDAU_ANALYTIC_HPP
#define HYPERLANDAU_ANALYTIC_HPP

#include <functional>
#include <optional>

#include "hyperlandau/jacobi.hpp"
#include "hyperlandau/model.hpp"

namespace hyperlandau {

/// eps_n = A0^2 - (A0 - n)^2. Independent of lambda: every admissible
/// lambda carries the same ladder of levels.
double epsilon_n(double A0, int n);

/// scale * (w - 1)^(p/2) * (w + 1)^(-q/2) * P_deg^{(a,b)}(w) with w = cosh u.
///
/// Evaluated in log space (w - 1 = 2 sinh^2(u/2), w + 1 = 2 cosh^2(u/2)) so
/// the prefactor neither loses precision near the apex nor overflows in the
/// exponential tail.
class RadialFunction {
 public:
  RadialFunction(double p, double q, int degree, double a, double b, double scale = 1.0);

  double operator()(double u) const;
  /// Exact d/du of the closed form.
  double derivative(double u) const;

  RadialFunction scaled(double factor) const;

  double scale() const noexcept { return scale_; }
  int degree() const noexcept { return degree_; }
  double jacobi_a() const noexcept { return a_; }
  double jacobi_b() const noexcept { return b_; }

 private:
  double log_prefactor(double u) const;

  double p_;
  double q_;
  int degree_;
  double a_;
  double b_;
  double scale_;
};

/// N tanh(u/2)^lambda sinh(u)^(-A0), unit L2 norm on (0, inf).
class GroundState {
 public:
  GroundState(double A0, double lambda, double norm) : A0_(A0), lambda_(lambda), norm_(norm) {}
  double operator()(double u) const;
  double norm_constant() const noexcept { return norm_; }

 private:
  double A0_;
  double lambda_;
  double norm_;
};

/// Throws NotNormalizable unless A0 > 0 and lambda >= A0.
GroundState ground_state(double A0, double lambda);

struct Normalization {
  double constant;                           ///< N with integral of (N f)^2 = 1
  std::function<double(double)> normalized;  ///< u -> N f(u)
};

/// Fixes N by adaptive Gauss-Kronrod quadrature of f^2 over (u_lo, u_hi).
/// Throws NotNormalizable if the integral is not finite, the apex probe
/// (u_lo == 0) shows a non-integrable singularity, or the last tenth of the
/// interval still carries a non-negligible share of the weight.
Normalization normalize(const std::function<double(double)>& f, double u_lo, double u_hi);

/// Upper quadrature limit max(30, 40 / (A0 - n)) for level n.
double normalization_cutoff(double A0, int n);

/// Level n of the constant-field system: g1 (partner H1) and, for n >= 1,
/// g2 (partner H2 at index n - 1), each with unit L2 norm in u.
struct RadialEigenpair {
  double A0;
  double lambda;
  int n;
  double epsilon;
  RadialFunction g1;
  std::optional<RadialFunction> g2;
  double norm_g1;
  double norm_g2;  ///< 0 when g2 is absent
  /// Pointwise |L- g1 - sqrt(eps) g2| / max|g2| at the probe used to fix g2's sign.
  double closure_residual;
};

/// g1 ~ u^{s-} is positive near the apex; g2's sign is chosen so that
/// L- g1 = +sqrt(eps) g2 holds (not its own leading-coefficient sign).
RadialEigenpair radial_eigenpair(double A0, double lambda, int n);

struct EnergyPair {
  double plus;
  double minus;
};

/// +/- (hbar v_F / R) sqrt(eps_n); both zero for n = 0.
EnergyPair weyl_energies(double A0, double R, double v_F, double hbar, int n);

}  // namespace hyperlandau

#endif  // HYPERLANDAU_ANALYTIC_HPP
