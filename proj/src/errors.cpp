#include "oscgauss/errors.hpp"

namespace oscgauss {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ComplexNotSupported: return "ComplexNotSupported";
    case ErrorCode::DerivativeUnavailable: return "DerivativeUnavailable";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::SeriesDivergence: return "SeriesDivergence";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::EigenFailure: return "EigenFailure";
    case ErrorCode::SingularVandermonde: return "SingularVandermonde";
    case ErrorCode::BadEllipseParameter: return "BadEllipseParameter";
    case ErrorCode::TooFewNodes: return "TooFewNodes";
    case ErrorCode::NonexistentPolynomial: return "NonexistentPolynomial";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NoConvergence: return "NoConvergence";
  }
  return "Unknown";
}

bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownFunction:
    case ErrorCode::InvalidArgument:
    case ErrorCode::ComplexNotSupported:
    case ErrorCode::DerivativeUnavailable:
    case ErrorCode::BadEllipseParameter:
    case ErrorCode::TooFewNodes:
    case ErrorCode::IndexOutOfRange:
      return true;
    default:
      return false;
  }
}

}  // namespace oscgauss
