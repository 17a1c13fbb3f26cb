#pragma once

#include <stdexcept>
#include <string>

namespace carrylab {

// Every contract violation surfaces as one of these codes so callers and
// tests can match on the condition rather than on message text.
enum class Errc {
    WrongCardinality,
    NotCompleteResidueSystem,
    MDoesNotDivideQ,
    NotAUnit,
    BadTarget,
    DomainMismatch,
    BadT,
    NotOddPrime,
    HypothesesNotMet,
    SpaceTooLarge,
    UnknownTheorem,
    CheckpointMismatch,
    ParseError,
    BadArgument,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::WrongCardinality: return "WrongCardinality";
        case Errc::NotCompleteResidueSystem: return "NotCompleteResidueSystem";
        case Errc::MDoesNotDivideQ: return "MDoesNotDivideQ";
        case Errc::NotAUnit: return "NotAUnit";
        case Errc::BadTarget: return "BadTarget";
        case Errc::DomainMismatch: return "DomainMismatch";
        case Errc::BadT: return "BadT";
        case Errc::NotOddPrime: return "NotOddPrime";
        case Errc::HypothesesNotMet: return "HypothesesNotMet";
        case Errc::SpaceTooLarge: return "SpaceTooLarge";
        case Errc::UnknownTheorem: return "UnknownTheorem";
        case Errc::CheckpointMismatch: return "CheckpointMismatch";
        case Errc::ParseError: return "ParseError";
        case Errc::BadArgument: return "BadArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

}  // namespace carrylab
