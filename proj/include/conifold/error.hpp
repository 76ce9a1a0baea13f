#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conifold {

enum class ErrorKind {
  EmptyInput,
  NotFullDimensional,
  UnsupportedDimension,
  OriginNotInterior,
  NotIntegral,
  NotReflexive,
  NotReflexiveFacet,
  WorseThanNodal,
  DimensionMismatch,
  BudgetExceeded,
  InsufficientData,
  ParseError,
  DuplicateName,
  InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

// Every failure the library reports on bad input or exhausted budgets is an
// Error; anything else escaping the library is an internal invariant violation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace conifold
