#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pinney {

/// Machine-readable failure categories. Every thrown pinney::Error carries one
/// of these; the CLI maps them to reason codes and exit statuses.
enum class Errc {
    InvalidArgument,        // malformed inputs (nonpositive tolerance, x = 0, ...)
    MismatchedTimes,        // two states expected at the same t
    OutOfRange,             // tabulated frequency queried outside its knots
    DegenerateSeeds,        // I3 <= 2k: seeds identical or not distinct
    NegativeRadicand,       // inner square root argument below tolerance
    NonpositiveSquare,      // reconstructed x^2 <= 0
    BranchUnresolvable,     // neither branch sign reproduces the target
    OutsideK,               // lambda1 < 0 and lambda2 < 0
    Lambda12SignViolation,  // lambda12 sign incompatible with the region
    InfeasibleRatio,        // inverse change of variables yields negative y^2
    SingularityGuard,       // |x| fell below the configured floor
    StepUnderflow,          // accepted step below the minimum step size
    QuadratureDepthExceeded,// adaptive Simpson hit its recursion cap
    IntegrandEvalFailure,   // user-supplied f/g threw during evaluation
    ConfigMismatch,         // inconsistent run configuration (seed freq/k, ...)
    IoError,                // file could not be read or written
};

/// Stable uppercase reason code for reports, e.g. "DEGENERATE_SEEDS".
std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace pinney
