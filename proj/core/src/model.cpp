#include "hyperlandau/model.hpp"

#include <cmath>
#include <sstream>

namespace hyperlandau {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::NotNormalizable: return "NotNormalizable";
    case ErrorCode::InvalidSuperpotential: return "InvalidSuperpotential";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::NonFinitePotential: return "NonFinitePotential";
    case ErrorCode::NonFiniteSample: return "NonFiniteSample";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::BranchMismatch: return "BranchMismatch";
  }
  return "Unknown";
}

std::string_view to_string(ViolationCode code) noexcept {
  switch (code) {
    case ViolationCode::InvalidSystemParams: return "InvalidSystemParams";
    case ViolationCode::NonPositiveA0: return "NonPositiveA0";
    case ViolationCode::LambdaTooSmall: return "LambdaTooSmall";
    case ViolationCode::LevelOutOfRange: return "LevelOutOfRange";
    case ViolationCode::NonHalfOddLambda: return "NonHalfOddLambda";
  }
  return "Unknown";
}

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

std::string params_problem(const SystemParams& p) {
  std::ostringstream os;
  auto need_positive = [&](const char* name, double v) {
    if (!positive_finite(v)) os << name << " must be > 0 (got " << v << "); ";
  };
  need_positive("hbar", p.hbar);
  need_positive("c", p.c);
  need_positive("v_F", p.v_F);
  need_positive("e_charge", p.e_charge);
  need_positive("R", p.R);
  if (!std::isfinite(p.mass) || p.mass < 0.0) os << "mass must be >= 0 (got " << p.mass << "); ";
  return os.str();
}

}  // namespace

void SystemParams::check() const {
  if (auto problem = params_problem(*this); !problem.empty())
    throw Error(ErrorCode::InvalidParameter, problem);
}

int max_level(double A0) {
  const double whole = std::floor(A0);
  return whole == A0 ? static_cast<int>(whole) - 1 : static_cast<int>(whole);
}

bool ValidationReport::passed() const noexcept {
  for (const auto& v : violations)
    if (v.severity == Severity::Error) return false;
  return true;
}

bool ValidationReport::has(ViolationCode code) const noexcept {
  for (const auto& v : violations)
    if (v.code == code) return true;
  return false;
}

ValidationReport validate(const SystemParams& params, const FieldConfig& field,
                          const QuantumNumbers& qn) {
  ValidationReport report;
  auto add = [&](ViolationCode code, Severity sev, std::string msg) {
    report.violations.push_back({code, sev, std::move(msg)});
  };

  if (auto problem = params_problem(params); !problem.empty())
    add(ViolationCode::InvalidSystemParams, Severity::Error, problem);

  const double A0 = field.A0;
  const double lambda = qn.lambda();
  if (!positive_finite(A0)) {
    add(ViolationCode::NonPositiveA0, Severity::Error, "A0 must be > 0");
  } else {
    if (!(lambda > A0)) {
      std::ostringstream os;
      os << "lambda = " << lambda << " must exceed A0 = " << A0;
      add(ViolationCode::LambdaTooSmall, Severity::Error, os.str());
    }
    const int top = max_level(A0);
    if (qn.n < 0 || qn.n > top) {
      std::ostringstream os;
      os << "n = " << qn.n << " outside [0, " << top << "]";
      add(ViolationCode::LevelOutOfRange, Severity::Error, os.str());
    }
  }
  if (!qn.half_odd()) {
    std::ostringstream os;
    os << "lambda = " << lambda << " is not a half-odd integer; spinor is not single-valued in phi";
    add(ViolationCode::NonHalfOddLambda, Severity::Warning, os.str());
  }
  return report;
}

Point3 embed(double u, double phi, double R) noexcept {
  const double rho = R * std::sinh(u);
  return {rho * std::cos(phi), rho * std::sin(phi), R * std::cosh(u)};
}

}  // namespace hyperlandau
