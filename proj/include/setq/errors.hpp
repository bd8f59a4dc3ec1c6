#pragma once

#include <stdexcept>
#include <string>

namespace setq {

// Error codes for all domain-level failures. The CLI maps these to
// machine-readable {"error": code, "detail": ...} objects with exit status 1.
enum class Errc {
    NonDivisible,
    InvalidR,
    InfeasiblePromise,
    OutOfRange,
    OddDomain,
    SizeMismatch,
    NotRToOne,
    InvalidParams,
    TooLarge,
    DimensionMismatch,
    NotInjective,
    EmptyRelation,
    IsolatedElement,
    TooFewPoints,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonDivisible: return "non_divisible";
        case Errc::InvalidR: return "invalid_r";
        case Errc::InfeasiblePromise: return "infeasible_promise";
        case Errc::OutOfRange: return "out_of_range";
        case Errc::OddDomain: return "odd_domain";
        case Errc::SizeMismatch: return "size_mismatch";
        case Errc::NotRToOne: return "not_r_to_one";
        case Errc::InvalidParams: return "invalid_params";
        case Errc::TooLarge: return "too_large";
        case Errc::DimensionMismatch: return "dimension_mismatch";
        case Errc::NotInjective: return "not_injective";
        case Errc::EmptyRelation: return "empty_relation";
        case Errc::IsolatedElement: return "isolated_element";
        case Errc::TooFewPoints: return "too_few_points";
    }
    return "unknown";
}

class DomainError : public std::runtime_error {
  public:
    DomainError(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
    throw DomainError(code, detail);
}

inline void require(bool cond, Errc code, const std::string& detail) {
    if (!cond) fail(code, detail);
}

}  // namespace setq
