#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypertree {

enum class ErrorCode {
  NonUniform,
  DuplicateEdge,
  VertexOutOfRange,
  RepeatedVertexInEdge,
  NotLinear,
  BadDimensions,
  NotATree,
  BadOverlap,
  DimensionMismatch,
  TooLarge,
  Disconnected,
  NoConvergence,
  NotSquare,
  BadPartition,
  InvalidSpec,
  MultipleEdge,
  PendentEdge,
  NotPendentPaths,
  IncompleteCensus,
  InvalidArgument,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonUniform: return "NonUniform";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::RepeatedVertexInEdge: return "RepeatedVertexInEdge";
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::BadDimensions: return "BadDimensions";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::BadOverlap: return "BadOverlap";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::MultipleEdge: return "MultipleEdge";
    case ErrorCode::PendentEdge: return "PendentEdge";
    case ErrorCode::NotPendentPaths: return "NotPendentPaths";
    case ErrorCode::IncompleteCensus: return "IncompleteCensus";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypertree
