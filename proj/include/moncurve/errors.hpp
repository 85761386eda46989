#pragma once

#include <stdexcept>
#include <string>

namespace moncurve {

// Error categories for recoverable (user-facing) failures.
enum class errc {
    non_coprime,
    out_of_range,
    degenerate_degree,
    invalid_exponents,
    not_graded,
    not_in_ring,
    bound_exceeded,
    bound_too_small,
    curve_mismatch,
    not_stabilized,
    hypothesis_not_verified,
    l_undefined,
    params_out_of_range,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_coprime: return "NonCoprime";
        case errc::out_of_range: return "OutOfRange";
        case errc::degenerate_degree: return "DegenerateDegree";
        case errc::invalid_exponents: return "InvalidExponents";
        case errc::not_graded: return "NotGraded";
        case errc::not_in_ring: return "NotInRing";
        case errc::bound_exceeded: return "BoundExceeded";
        case errc::bound_too_small: return "BoundTooSmall";
        case errc::curve_mismatch: return "CurveMismatch";
        case errc::not_stabilized: return "NotStabilized";
        case errc::hypothesis_not_verified: return "HypothesisNotVerified";
        case errc::l_undefined: return "LUndefined";
        case errc::params_out_of_range: return "ParamsOutOfRange";
        case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

// Recoverable error caused by invalid input or an exhausted bound.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// Violation of a computational invariant that is supposed to hold by
// theory.  Always indicates a bug, never a bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& message)
        : std::logic_error("internal invariant violated: " + message) {}
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

inline void require_internal(bool condition, const std::string& message) {
    if (!condition) throw internal_error(message);
}

}  // namespace moncurve
