#include "pinney/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pinney/errors.hpp"

namespace pinney {

Trajectory::Trajectory(TrajectoryKind kind, FrequencySpec freq, double tol,
                       std::optional<double> k, std::vector<State> samples,
                       std::vector<double> accelerations)
    : kind_(kind),
      freq_(std::move(freq)),
      tol_(tol),
      k_(k),
      samples_(std::move(samples)),
      accel_(std::move(accelerations)) {
    require(!samples_.empty(), Errc::InvalidArgument, "trajectory needs at least one sample");
    require(accel_.size() == samples_.size(), Errc::InvalidArgument,
            "trajectory needs one acceleration per sample");
    for (std::size_t i = 1; i < samples_.size(); ++i) {
        require(samples_[i].t > samples_[i - 1].t, Errc::InvalidArgument,
                "trajectory samples must be strictly increasing in t");
    }
    if (kind_ == TrajectoryKind::MilnePinney) {
        const double s0 = samples_.front().x;
        for (const State& s : samples_) {
            require(s.x * s0 > 0.0, Errc::InvalidArgument,
                    "Milne-Pinney trajectory samples must share one sign of x");
        }
    }
}

State Trajectory::at(double t) const {
    const double lo = t_begin();
    const double hi = t_end();
    // Tolerate end-point roundoff from grid arithmetic.
    const double slack = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
    if (t < lo - slack || t > hi + slack) {
        fail(Errc::OutOfRange, "dense evaluation at t=" + std::to_string(t) +
                                   " outside trajectory span [" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + "]");
    }
    t = std::clamp(t, lo, hi);

    const auto it = std::upper_bound(
        samples_.begin(), samples_.end(), t,
        [](double value, const State& s) { return value < s.t; });
    std::size_t i1 = static_cast<std::size_t>(it - samples_.begin());
    if (i1 == 0) i1 = 1;
    if (i1 == samples_.size()) i1 = samples_.size() - 1;
    const std::size_t i0 = i1 - 1;

    const State& p0 = samples_[i0];
    const State& p1 = samples_[i1];
    const double h = p1.t - p0.t;
    const double s = (t - p0.t) / h;

    // Quintic Hermite basis on [0, 1] matching value, first and second
    // derivative at both ends.
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double s4 = s3 * s;
    const double s5 = s4 * s;
    const double h00 = 1.0 - 10.0 * s3 + 15.0 * s4 - 6.0 * s5;
    const double h01 = s - 6.0 * s3 + 8.0 * s4 - 3.0 * s5;
    const double h02 = 0.5 * s2 - 1.5 * s3 + 1.5 * s4 - 0.5 * s5;
    const double h10 = 10.0 * s3 - 15.0 * s4 + 6.0 * s5;
    const double h11 = -4.0 * s3 + 7.0 * s4 - 3.0 * s5;
    const double h12 = 0.5 * s3 - s4 + 0.5 * s5;

    const double d00 = -30.0 * s2 + 60.0 * s3 - 30.0 * s4;
    const double d01 = 1.0 - 18.0 * s2 + 32.0 * s3 - 15.0 * s4;
    const double d02 = s - 4.5 * s2 + 6.0 * s3 - 2.5 * s4;
    const double d10 = 30.0 * s2 - 60.0 * s3 + 30.0 * s4;
    const double d11 = -12.0 * s2 + 28.0 * s3 - 15.0 * s4;
    const double d12 = 1.5 * s2 - 4.0 * s3 + 2.5 * s4;

    const double a0 = accel_[i0];
    const double a1 = accel_[i1];
    const double x = p0.x * h00 + h * p0.v * h01 + h * h * a0 * h02 +
                     p1.x * h10 + h * p1.v * h11 + h * h * a1 * h12;
    const double v = (p0.x * d00 + h * p0.v * d01 + h * h * a0 * d02 +
                      p1.x * d10 + h * p1.v * d11 + h * h * a1 * d12) / h;
    return State{t, x, v};
}

double wronskian(const State& y1, const State& y2) {
    const double scale = std::max({1.0, std::abs(y1.t), std::abs(y2.t)});
    require(std::abs(y1.t - y2.t) <= 1e-12 * scale, Errc::MismatchedTimes,
            "wronskian requires states at the same time");
    return y1.x * y2.v - y2.x * y1.v;
}

std::vector<double> common_grid(const Trajectory& a, const Trajectory& b) {
    const double lo = std::max(a.t_begin(), b.t_begin());
    const double hi = std::min(a.t_end(), b.t_end());
    require(lo < hi, Errc::InvalidArgument, "trajectories have disjoint time spans");

    std::vector<double> grid;
    grid.reserve(a.size() + b.size());
    for (const State& s : a.samples())
        if (s.t >= lo && s.t <= hi) grid.push_back(s.t);
    for (const State& s : b.samples())
        if (s.t >= lo && s.t <= hi) grid.push_back(s.t);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    // Merge near-coincident nodes from independent integrations.
    std::vector<double> out;
    out.reserve(grid.size());
    const double eps = 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    for (double t : grid) {
        if (out.empty() || t - out.back() > eps) out.push_back(t);
    }
    return out;
}

}  // namespace pinney
