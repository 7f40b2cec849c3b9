#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arakelov {

enum class ErrorCode {
  // exact-algebra
  ZeroPolynomial,
  BoundViolation,
  ParseError,
  DivisionByZero,
  // weierstrass
  DegenerateFamily,
  DegreeBound,
  UnclassifiableOrders,
  AllSlicesDegenerate,
  GenericAmbiguous,
  AuditFailure,
  // picard-fuchs
  IsotrivialFamily,
  SingularOnPath,
  NoConvergence,
  RootIsolationFailure,
  // arakelov-formulas
  RankOrder,
  LengthMismatch,
  MaximalityViolation,
  InvalidData,
  // triangle-ledger
  MissingSlot,
  Underdetermined,
  Overdetermined,
  NegativeDifference,
  // cli
  SpecError,
};

std::string_view to_string(ErrorCode code);

/// All library failures are reported through this exception; `code()` names
/// the contract violation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the polynomial grammar; `offset()` is the byte offset into the
/// input where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::ParseError, "at byte " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace arakelov
