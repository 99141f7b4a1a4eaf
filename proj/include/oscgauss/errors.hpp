#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oscgauss {

enum class ErrorCode {
  UnknownFunction,
  InvalidArgument,
  ComplexNotSupported,
  DerivativeUnavailable,
  DegreeOverflow,
  SeriesDivergence,
  IndexOutOfRange,
  NotPositiveDefinite,
  EigenFailure,
  SingularVandermonde,
  BadEllipseParameter,
  TooFewNodes,
  NonexistentPolynomial,
  ConvergenceFailure,
  NoConvergence,
};

std::string_view to_string(ErrorCode code);

/// True for errors caused by bad user input rather than numerical failure.
bool is_usage_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace oscgauss
