#ifndef HYPERLANDAU_ERROR_HPP
#define HYPERLANDAU_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperlandau {

enum class ErrorCode {
  DomainError,
  InvalidParameter,
  LevelOutOfRange,
  NotNormalizable,
  InvalidSuperpotential,
  GridTooCoarse,
  GridMismatch,
  NonFinitePotential,
  NonFiniteSample,
  ConvergenceFailure,
  DegenerateDenominator,
  BranchMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception type; the code
// identifies the failure class for callers that need to dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyperlandau

#endif  // HYPERLANDAU_ERROR_HPP
