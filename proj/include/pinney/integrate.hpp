#pragma once

#include <cstddef>
#include <functional>

#include "pinney/trajectory.hpp"

namespace pinney {

struct IntegrateOptions {
    /// Local truncation error per unit step; global error scales ~ tol.
    double tol = 1e-10;
    /// Singularity guard: abort when |x| drops below this floor.
    double x_floor = 1e-8;
    /// Abort when the accepted step size falls below this magnitude.
    double min_step = 1e-12;
    double max_step = 1.0;
    std::size_t max_steps = 50'000'000;
};

/// Integrates xdd = -omega^2(t) x + k / x^3 from init to t_end.
///
/// The sign of x is preserved over the whole trajectory; approaching the
/// x = 0 singularity trips the guard (SingularityGuard / StepUnderflow).
Trajectory integrate_mp(double k, const FrequencySpec& freq, const State& init,
                        double t_end, const IntegrateOptions& opts = {});

/// Integrates ydd = -omega^2(t) y from init to t_end.
Trajectory integrate_tdho(const FrequencySpec& freq, const State& init,
                          double t_end, const IntegrateOptions& opts = {});

/// Coupled system xdd = f(y/x)/x^3 - omega^2 x, ydd = g(y/x)/y^3 - omega^2 y.
struct GeneralizedErmakovSpec {
    std::function<double(double)> f;
    std::function<double(double)> g;
    FrequencySpec freq;
};

struct ErmakovPair {
    Trajectory x;
    Trajectory y;
};

/// Integrates the coupled pair. The singularity guard fires for a component
/// only while its inverse-cubic term is active (nonzero shape function), so
/// e.g. g = 0 lets y pass through zero like a plain oscillator.
ErmakovPair integrate_generalized_ermakov(const GeneralizedErmakovSpec& spec,
                                          const State& init_x, const State& init_y,
                                          double t_end, const IntegrateOptions& opts = {});

}  // namespace pinney
