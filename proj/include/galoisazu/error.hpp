#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galoisazu {

enum class ErrorCode {
  // exact fields
  DivisionByZero,
  FieldMismatch,
  NoSuchElement,
  InvalidField,
  // algebras
  CharTwo,
  CharNotTwo,
  ZeroParameter,
  BadRootOrder,
  NotAUnit,
  FieldTooLarge,
  InfiniteField,
  DimensionTooLarge,
  NotAssociative,
  // group actions
  NotAutomorphism,
  WrongOrder,
  NonCommuting,
  // Galois certification
  ActionMovesBase,
  InvariantsMismatch,
  GammaSingular,
  BaseMismatch,
  NotStrict,
  FixedRingNotField,
  SubgroupNotFactor,
  UnsupportedSubgroup,
  EmbeddingInvalid,
  NotAlgebraMorphism,
  NotEquivariant,
  NotCommutative,
  NotCentralizing,
  NotInvertible,
  Unsupported,
  UnsupportedField,
  CheckFailed,
  // interchange
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace galoisazu
