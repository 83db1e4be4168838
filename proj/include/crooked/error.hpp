#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crooked {

enum class ErrorCode {
  ConfigInvalid,
  UnresolvedCurve,
  SelfIntersectingFibers,
  AmbiguousCrossing,
  SearchExhausted,
  OutsideDomain,
  EmptyLayer,
  Io,
};

constexpr std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::ConfigInvalid: return "CONFIG_INVALID";
    case ErrorCode::UnresolvedCurve: return "UNRESOLVED_CURVE";
    case ErrorCode::SelfIntersectingFibers: return "SELF_INTERSECTING_FIBERS";
    case ErrorCode::AmbiguousCrossing: return "AMBIGUOUS_CROSSING";
    case ErrorCode::SearchExhausted: return "SEARCH_EXHAUSTED";
    case ErrorCode::OutsideDomain: return "OUTSIDE_DOMAIN";
    case ErrorCode::EmptyLayer: return "EMPTY_LAYER";
    case ErrorCode::Io: return "IO_ERROR";
  }
  return "UNKNOWN";
}

/// Process exit status for each error kind; 0 is success, 1 is reserved for
/// unexpected failures.
constexpr int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ConfigInvalid: return 2;
    case ErrorCode::UnresolvedCurve: return 3;
    case ErrorCode::SelfIntersectingFibers: return 4;
    case ErrorCode::AmbiguousCrossing: return 5;
    case ErrorCode::SearchExhausted: return 6;
    case ErrorCode::OutsideDomain: return 7;
    case ErrorCode::EmptyLayer: return 8;
    case ErrorCode::Io: return 9;
  }
  return 1;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace crooked
