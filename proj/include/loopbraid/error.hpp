/**
 * @file
 * @brief Error kinds shared by every module of the library.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loopbraid {

enum class ErrorKind {
    DivisionByZero,
    ParseError,
    InvalidRank,
    SizeMismatch,
    NotInjective,
    NotChargeConserving,
    ZeroGaugeFactor,
    IndexOutOfRange,
    RankMismatch,
    NotInvertible,
    NotABraidSolution,
    ParamMismatch,
    ConstraintViolated,
    FTypeDetected,
    Unclassifiable,
    NotARepresentation,
    InconsistentParameters,
    OracleMismatch,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidRank: return "InvalidRank";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::NotInjective: return "NotInjective";
        case ErrorKind::NotChargeConserving: return "NotChargeConserving";
        case ErrorKind::ZeroGaugeFactor: return "ZeroGaugeFactor";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::NotABraidSolution: return "NotABraidSolution";
        case ErrorKind::ParamMismatch: return "ParamMismatch";
        case ErrorKind::ConstraintViolated: return "ConstraintViolated";
        case ErrorKind::FTypeDetected: return "FTypeDetected";
        case ErrorKind::Unclassifiable: return "Unclassifiable";
        case ErrorKind::NotARepresentation: return "NotARepresentation";
        case ErrorKind::InconsistentParameters: return "InconsistentParameters";
        case ErrorKind::OracleMismatch: return "OracleMismatch";
    }
    return "Unknown";
}

/// Exception carrying an ErrorKind; the message is prefixed with the kind name.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string{ to_string(kind) } + ": " + what), kind_{ kind } {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace loopbraid
