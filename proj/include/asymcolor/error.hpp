#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace asymcolor {

enum class Errc {
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  DanglingEndpoint,
  EmptyGraph,
  ParseError,
  InvalidColoring,
  InvalidRotation,
  VerticesNotDistinct,
  SizeLimitExceeded,
  BudgetExceeded,
  OddEulerDefect,
  UnsupportedScope,
  NotPlanar,
  NotThreeConnected,
  SearchExhausted,
  InternalVerificationFailure,
  BadParams,
};

std::string_view errc_name(Errc code);

/// Library error. Parse errors carry a 1-based line/column; 0 means "no position".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, int line = 0, int column = 0);

  Errc code() const noexcept { return code_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  Errc code_;
  int line_;
  int column_;
};

}  // namespace asymcolor
