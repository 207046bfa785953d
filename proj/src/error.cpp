#include "galoisazu/error.hpp"

namespace galoisazu {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NoSuchElement: return "NoSuchElement";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::CharTwo: return "CharTwo";
    case ErrorCode::CharNotTwo: return "CharNotTwo";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::BadRootOrder: return "BadRootOrder";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::InfiniteField: return "InfiniteField";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::WrongOrder: return "WrongOrder";
    case ErrorCode::NonCommuting: return "NonCommuting";
    case ErrorCode::ActionMovesBase: return "ActionMovesBase";
    case ErrorCode::InvariantsMismatch: return "InvariantsMismatch";
    case ErrorCode::GammaSingular: return "GammaSingular";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::NotStrict: return "NotStrict";
    case ErrorCode::FixedRingNotField: return "FixedRingNotField";
    case ErrorCode::SubgroupNotFactor: return "SubgroupNotFactor";
    case ErrorCode::UnsupportedSubgroup: return "UnsupportedSubgroup";
    case ErrorCode::EmbeddingInvalid: return "EmbeddingInvalid";
    case ErrorCode::NotAlgebraMorphism: return "NotAlgebraMorphism";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NotCentralizing: return "NotCentralizing";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::CheckFailed: return "CheckFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace galoisazu
