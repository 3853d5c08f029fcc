#include "pinney/frequency.hpp"

#include <algorithm>
#include <cmath>

#include "pinney/errors.hpp"

namespace pinney {

FrequencySpec FrequencySpec::constant(double omega0) {
    return FrequencySpec(Variant{ConstantFrequency{omega0}});
}

FrequencySpec FrequencySpec::sinusoidal(double a, double b, double c) {
    return FrequencySpec(Variant{SinusoidalFrequency{a, b, c}});
}

FrequencySpec FrequencySpec::polynomial(std::vector<double> coeffs) {
    require(!coeffs.empty(), Errc::InvalidArgument,
            "polynomial frequency needs at least one coefficient");
    return FrequencySpec(Variant{PolynomialFrequency{std::move(coeffs)}});
}

FrequencySpec FrequencySpec::tabulated(std::vector<double> t, std::vector<double> omega) {
    require(!t.empty() && t.size() == omega.size(), Errc::InvalidArgument,
            "tabulated frequency needs matching nonempty t/omega arrays");
    for (std::size_t i = 1; i < t.size(); ++i) {
        require(t[i] > t[i - 1], Errc::InvalidArgument,
                "tabulated frequency knots must be strictly increasing in t");
    }
    return FrequencySpec(Variant{TabulatedFrequency{std::move(t), std::move(omega)}});
}

namespace {

double eval_variant(const ConstantFrequency& f, double) { return f.omega0; }

double eval_variant(const SinusoidalFrequency& f, double t) {
    return f.a + f.b * std::sin(f.c * t);
}

double eval_variant(const PolynomialFrequency& f, double t) {
    // Horner
    double acc = 0.0;
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double eval_variant(const TabulatedFrequency& f, double t) {
    if (t < f.t.front() || t > f.t.back()) {
        fail(Errc::OutOfRange, "tabulated frequency queried at t=" + std::to_string(t) +
                                   " outside [" + std::to_string(f.t.front()) + ", " +
                                   std::to_string(f.t.back()) + "]");
    }
    const auto hi = std::upper_bound(f.t.begin(), f.t.end(), t);
    if (hi == f.t.end()) return f.omega.back();
    if (hi == f.t.begin()) return f.omega.front();
    const auto i = static_cast<std::size_t>(hi - f.t.begin());
    const double w = (t - f.t[i - 1]) / (f.t[i] - f.t[i - 1]);
    return (1.0 - w) * f.omega[i - 1] + w * f.omega[i];
}

}  // namespace

double FrequencySpec::eval(double t) const {
    return std::visit([t](const auto& f) { return eval_variant(f, t); }, spec_);
}

double eval_frequency(const FrequencySpec& spec, double t) { return spec.eval(t); }

}  // namespace pinney
