#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pinney/frequency.hpp"

namespace pinney {

/// One sample of a second-order ODE solution.
struct State {
    double t = 0.0;  ///< time
    double x = 0.0;  ///< position
    double v = 0.0;  ///< velocity dx/dt
};

enum class TrajectoryKind {
    MilnePinney,            // xdd = -omega^2(t) x + k / x^3
    Oscillator,             // ydd = -omega^2(t) y
    GeneralizedErmakovPair, // one component of the coupled f/g system
};

/// Immutable solution record: accepted integration steps plus dense output.
///
/// Dense evaluation uses two-point quintic Hermite interpolation built from
/// (x, v, a) at the bracketing samples, where a is the right-hand side
/// acceleration stored at construction. One polynomial provides both x and v,
/// keeping the interpolant C^1 at the nodes.
class Trajectory {
public:
    Trajectory(TrajectoryKind kind, FrequencySpec freq, double tol,
               std::optional<double> k, std::vector<State> samples,
               std::vector<double> accelerations);

    [[nodiscard]] TrajectoryKind kind() const noexcept { return kind_; }
    [[nodiscard]] const FrequencySpec& freq() const noexcept { return freq_; }
    [[nodiscard]] double tol() const noexcept { return tol_; }
    [[nodiscard]] std::optional<double> k() const noexcept { return k_; }

    [[nodiscard]] std::span<const State> samples() const noexcept { return samples_; }
    [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
    [[nodiscard]] const State& front() const { return samples_.front(); }
    [[nodiscard]] const State& back() const { return samples_.back(); }
    [[nodiscard]] double t_begin() const { return samples_.front().t; }
    [[nodiscard]] double t_end() const { return samples_.back().t; }
    [[nodiscard]] double acceleration(std::size_t i) const { return accel_[i]; }

    /// Dense-output evaluation at t within [t_begin, t_end].
    [[nodiscard]] State at(double t) const;

private:
    TrajectoryKind kind_;
    FrequencySpec freq_;
    double tol_;
    std::optional<double> k_;
    std::vector<State> samples_;
    std::vector<double> accel_;
};

/// Wronskian y1 x y2' - y2 x y1' of two states sharing the same time.
double wronskian(const State& y1, const State& y2);

/// Sorted union of both trajectories' sample times restricted to the overlap
/// of their spans. Throws InvalidArgument when the spans are disjoint.
std::vector<double> common_grid(const Trajectory& a, const Trajectory& b);

}  // namespace pinney
