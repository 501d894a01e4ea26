#pragma once

#include <stdexcept>
#include <string>

namespace leamer {

// Machine-readable reasons for every exception thrown by the library.
// The CLI maps these to exit status 1 (invalid input) and prints the message.
enum class ErrorCode {
    EmptyGenerators,      // no generators supplied
    NonCoprimeGenerators, // gcd of generators != 1
    InvalidGenerator,     // generator <= 0
    GeneratorsTooLarge,   // internal tables would exceed the configured cap
    NotAMember,           // queried value is not in the numerical monoid
    StepInMonoid,         // step s lies in the monoid, so the gap structure is void
    NonPositiveStep,      // step s <= 0
    NotAnElement,         // (x, n) is not an element of the Leamer monoid
    ElementMismatch,      // factorizations of different elements compared
    OverCap,              // enumeration exceeded the caller-supplied cap
    NoFiniteColumns,      // slope limit undefined: every column is infinite
    WitnessNotApplicable, // requested witness needs a larger parameter
    BetaOutOfRange,       // turtle witness index outside [1, beta_max]
    InvalidArgument,      // malformed parameter (window sizes, parse errors, ...)
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyGenerators: return "EmptyGenerators";
        case ErrorCode::NonCoprimeGenerators: return "NonCoprimeGenerators";
        case ErrorCode::InvalidGenerator: return "InvalidGenerator";
        case ErrorCode::GeneratorsTooLarge: return "GeneratorsTooLarge";
        case ErrorCode::NotAMember: return "NotAMember";
        case ErrorCode::StepInMonoid: return "StepInMonoid";
        case ErrorCode::NonPositiveStep: return "NonPositiveStep";
        case ErrorCode::NotAnElement: return "NotAnElement";
        case ErrorCode::ElementMismatch: return "ElementMismatch";
        case ErrorCode::OverCap: return "OverCap";
        case ErrorCode::NoFiniteColumns: return "NoFiniteColumns";
        case ErrorCode::WitnessNotApplicable: return "WitnessNotApplicable";
        case ErrorCode::BetaOutOfRange: return "BetaOutOfRange";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace leamer
