#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plabic {

enum class ErrorCode {
  InvalidInput,
  ParseError,
  SizeMismatch,
  EmptyInput,
  InvalidNecklace,
  NotPositroid,
  NotOrientable,
  ClosedStrand,
  NotReduced,
  NotComplete,
  TypeMismatch,
  PatternMismatch,
  CapExceeded,
  BoundExceeded,
  NotWS,
  NotMaximal,
  IndexMismatch,
  InvalidVertexData,
  NonPositive,
  FixedPointsPresent,
  IO,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidNecklace: return "InvalidNecklace";
    case ErrorCode::NotPositroid: return "NotPositroid";
    case ErrorCode::NotOrientable: return "NotOrientable";
    case ErrorCode::ClosedStrand: return "ClosedStrand";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotWS: return "NotWS";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::InvalidVertexData: return "InvalidVertexData";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::FixedPointsPresent: return "FixedPointsPresent";
    case ErrorCode::IO: return "IO";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a stable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

inline void require(bool condition, ErrorCode code, const std::string& detail) {
  if (!condition) fail(code, detail);
}

}  // namespace plabic
