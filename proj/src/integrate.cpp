#include "pinney/integrate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "pinney/errors.hpp"

namespace pinney {
namespace {

// Dormand-Prince 5(4) tableau. The 5th-order row doubles as stage 7 (FSAL).
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
// 5th-order minus embedded 4th-order weights.
constexpr double e1 = b1 - 5179.0 / 57600.0;
constexpr double e3 = b3 - 7571.0 / 16695.0;
constexpr double e4 = b4 - 393.0 / 640.0;
constexpr double e5 = b5 + 92097.0 / 339200.0;
constexpr double e6 = b6 - 187.0 / 2100.0;
constexpr double e7 = -1.0 / 40.0;

template <std::size_t N>
struct StepRecord {
    double t;
    std::array<double, N> y;
    std::array<double, N> dy;
};

template <std::size_t N>
bool finite(const std::array<double, N>& y) {
    for (double v : y)
        if (!std::isfinite(v)) return false;
    return true;
}

/// Adaptive Dormand-Prince driver with error-per-unit-step acceptance:
/// a step of size h is accepted when the weighted RMS error estimate is
/// at most tol * h. `guard(t, y)` runs at the start and after every
/// accepted step and may throw.
template <std::size_t N, class Rhs, class Guard>
std::vector<StepRecord<N>> rk54(Rhs&& rhs, double t0, std::array<double, N> y0,
                                double t_end, const IntegrateOptions& opts,
                                Guard&& guard) {
    require(opts.tol > 0.0, Errc::InvalidArgument, "integrator tolerance must be positive");
    require(t_end > t0, Errc::InvalidArgument, "t_end must exceed the initial time");

    std::vector<StepRecord<N>> out;
    guard(t0, y0);

    std::array<double, N> k1{}, k2{}, k3{}, k4{}, k5{}, k6{}, k7{}, ytmp{}, ynew{};
    rhs(t0, y0, k1);
    require(finite(k1), Errc::SingularityGuard, "non-finite right-hand side at initial state");
    out.push_back({t0, y0, k1});

    double t = t0;
    double h = std::min(opts.max_step, 1e-2 * (t_end - t0));
    if (h <= 0.0) h = opts.min_step;
    const double t_slack = 1e-12 * std::max(1.0, std::abs(t_end));
    std::size_t steps = 0;

    while (t < t_end - t_slack) {
        require(++steps <= opts.max_steps, Errc::InvalidArgument, "step budget exhausted");
        h = std::min(h, t_end - t);
        if (h < opts.min_step) {
            fail(Errc::StepUnderflow,
                 "step size underflow at t=" + std::to_string(t) +
                     " (possible approach to the x=0 singularity)");
        }

        for (std::size_t i = 0; i < N; ++i) ytmp[i] = y0[i] + h * a21 * k1[i];
        rhs(t + c2 * h, ytmp, k2);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y0[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, ytmp, k3);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y0[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, ytmp, k4);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y0[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, ytmp, k5);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y0[i] +
                      h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (std::size_t i = 0; i < N; ++i)
            ynew[i] = y0[i] +
                      h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, ynew, k7);

        if (!finite(ynew) || !finite(k7)) {
            fail(Errc::SingularityGuard,
                 "non-finite state at t=" + std::to_string(t + h));
        }

        double err_sq = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double e =
                h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                     e7 * k7[i]);
            const double sc = std::max({1.0, std::abs(y0[i]), std::abs(ynew[i])});
            err_sq += (e / sc) * (e / sc);
        }
        const double err = std::sqrt(err_sq / static_cast<double>(N));
        const double target = opts.tol * h;

        double factor = 5.0;
        if (err > 0.0) factor = 0.9 * std::pow(target / err, 0.25);
        factor = std::clamp(factor, 0.2, 5.0);

        if (err <= target) {
            t += h;
            y0 = ynew;
            k1 = k7;  // FSAL
            guard(t, y0);
            out.push_back({t, y0, k1});
        }
        h *= factor;
        h = std::min(h, opts.max_step);
    }
    return out;
}

double ratio_or_inf(double num, double den) {
    if (den != 0.0) return num / den;
    return num >= 0.0 ? std::numeric_limits<double>::infinity()
                      : -std::numeric_limits<double>::infinity();
}

double call_shape(const std::function<double(double)>& f, double u, const char* name) {
    try {
        return f(u);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(Errc::IntegrandEvalFailure,
             std::string(name) + " evaluation failed at u=" + std::to_string(u) + ": " +
                 e.what());
    }
}

}  // namespace

Trajectory integrate_mp(double k, const FrequencySpec& freq, const State& init,
                        double t_end, const IntegrateOptions& opts) {
    require(k > 0.0, Errc::InvalidArgument, "Milne-Pinney coefficient k must be positive");
    require(init.x != 0.0, Errc::InvalidArgument,
            "Milne-Pinney initial position must be nonzero");

    const double sign0 = init.x > 0.0 ? 1.0 : -1.0;
    auto rhs = [&](double t, const std::array<double, 2>& y, std::array<double, 2>& d) {
        const double w2 = freq.omega_squared(t);
        d[0] = y[1];
        d[1] = -w2 * y[0] + k / (y[0] * y[0] * y[0]);
    };
    auto guard = [&](double t, const std::array<double, 2>& y) {
        if (std::abs(y[0]) < opts.x_floor || y[0] * sign0 <= 0.0) {
            fail(Errc::SingularityGuard,
                 "|x|=" + std::to_string(std::abs(y[0])) + " below floor " +
                     std::to_string(opts.x_floor) + " at t=" + std::to_string(t));
        }
    };

    auto rec = rk54<2>(rhs, init.t, {init.x, init.v}, t_end, opts, guard);
    std::vector<State> samples;
    std::vector<double> accel;
    samples.reserve(rec.size());
    accel.reserve(rec.size());
    for (const auto& r : rec) {
        samples.push_back({r.t, r.y[0], r.y[1]});
        accel.push_back(r.dy[1]);
    }
    return Trajectory(TrajectoryKind::MilnePinney, freq, opts.tol, k, std::move(samples),
                      std::move(accel));
}

Trajectory integrate_tdho(const FrequencySpec& freq, const State& init, double t_end,
                          const IntegrateOptions& opts) {
    auto rhs = [&](double t, const std::array<double, 2>& y, std::array<double, 2>& d) {
        d[0] = y[1];
        d[1] = -freq.omega_squared(t) * y[0];
    };
    auto rec = rk54<2>(rhs, init.t, {init.x, init.v}, t_end, opts,
                       [](double, const std::array<double, 2>&) {});
    std::vector<State> samples;
    std::vector<double> accel;
    samples.reserve(rec.size());
    accel.reserve(rec.size());
    for (const auto& r : rec) {
        samples.push_back({r.t, r.y[0], r.y[1]});
        accel.push_back(r.dy[1]);
    }
    return Trajectory(TrajectoryKind::Oscillator, freq, opts.tol, std::nullopt,
                      std::move(samples), std::move(accel));
}

ErmakovPair integrate_generalized_ermakov(const GeneralizedErmakovSpec& spec,
                                          const State& init_x, const State& init_y,
                                          double t_end, const IntegrateOptions& opts) {
    require(static_cast<bool>(spec.f) && static_cast<bool>(spec.g), Errc::InvalidArgument,
            "generalized Ermakov system needs both shape functions");
    require(init_x.x != 0.0 && init_y.x != 0.0, Errc::InvalidArgument,
            "generalized Ermakov initial positions must be nonzero");
    const double t_scale = std::max(1.0, std::abs(init_x.t));
    require(std::abs(init_x.t - init_y.t) <= 1e-12 * t_scale, Errc::MismatchedTimes,
            "generalized Ermakov components must start at the same time");

    // Inverse-cubic terms vanish identically when the shape function returns
    // zero, so the guard is keyed on the active force, not on |x| alone.
    constexpr double kShapeActive = 1e-14;

    auto rhs = [&](double t, const std::array<double, 4>& y, std::array<double, 4>& d) {
        const double x = y[0], vx = y[1], yy = y[2], vy = y[3];
        const double u = ratio_or_inf(yy, x);
        const double fu = call_shape(spec.f, u, "f");
        const double gu = call_shape(spec.g, u, "g");
        const double w2 = spec.freq.omega_squared(t);
        d[0] = vx;
        d[1] = (fu == 0.0 ? 0.0 : fu / (x * x * x)) - w2 * x;
        d[2] = vy;
        d[3] = (gu == 0.0 ? 0.0 : gu / (yy * yy * yy)) - w2 * yy;
    };
    auto guard = [&](double t, const std::array<double, 4>& y) {
        const double u = ratio_or_inf(y[2], y[0]);
        if (std::abs(y[0]) < opts.x_floor &&
            std::abs(call_shape(spec.f, u, "f")) > kShapeActive) {
            fail(Errc::SingularityGuard,
                 "|x| below floor at t=" + std::to_string(t) + " with active f term");
        }
        if (std::abs(y[2]) < opts.x_floor &&
            std::abs(call_shape(spec.g, u, "g")) > kShapeActive) {
            fail(Errc::SingularityGuard,
                 "|y| below floor at t=" + std::to_string(t) + " with active g term");
        }
    };

    auto rec = rk54<4>(rhs, init_x.t, {init_x.x, init_x.v, init_y.x, init_y.v}, t_end,
                       opts, guard);
    std::vector<State> sx, sy;
    std::vector<double> ax, ay;
    sx.reserve(rec.size());
    sy.reserve(rec.size());
    ax.reserve(rec.size());
    ay.reserve(rec.size());
    for (const auto& r : rec) {
        sx.push_back({r.t, r.y[0], r.y[1]});
        ax.push_back(r.dy[1]);
        sy.push_back({r.t, r.y[2], r.y[3]});
        ay.push_back(r.dy[3]);
    }
    return ErmakovPair{
        Trajectory(TrajectoryKind::GeneralizedErmakovPair, spec.freq, opts.tol,
                   std::nullopt, std::move(sx), std::move(ax)),
        Trajectory(TrajectoryKind::GeneralizedErmakovPair, spec.freq, opts.tol,
                   std::nullopt, std::move(sy), std::move(ay)),
    };
}

}  // namespace pinney
