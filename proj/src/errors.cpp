#include "pinney/errors.hpp"

namespace pinney {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidArgument:         return "INVALID_ARGUMENT";
        case Errc::MismatchedTimes:         return "MISMATCHED_TIMES";
        case Errc::OutOfRange:              return "OUT_OF_RANGE";
        case Errc::DegenerateSeeds:         return "DEGENERATE_SEEDS";
        case Errc::NegativeRadicand:        return "NEGATIVE_RADICAND";
        case Errc::NonpositiveSquare:       return "NONPOSITIVE_SQUARE";
        case Errc::BranchUnresolvable:      return "BRANCH_UNRESOLVABLE";
        case Errc::OutsideK:                return "OUTSIDE_K";
        case Errc::Lambda12SignViolation:   return "LAMBDA12_SIGN_VIOLATION";
        case Errc::InfeasibleRatio:         return "INFEASIBLE_RATIO";
        case Errc::SingularityGuard:        return "SINGULARITY_GUARD";
        case Errc::StepUnderflow:           return "STEP_UNDERFLOW";
        case Errc::QuadratureDepthExceeded: return "QUADRATURE_DEPTH_EXCEEDED";
        case Errc::IntegrandEvalFailure:    return "INTEGRAND_EVAL_FAILURE";
        case Errc::ConfigMismatch:          return "CONFIG_MISMATCH";
        case Errc::IoError:                 return "IO_ERROR";
    }
    return "UNKNOWN";
}

}  // namespace pinney
