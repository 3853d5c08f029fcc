#pragma once

#include <variant>
#include <vector>

namespace pinney {

// ============================================================================
// Frequency specifications: omega(t) for the oscillator and Milne-Pinney
// right-hand sides. Only omega^2 enters the equations, so omega(t) < 0 is
// allowed everywhere.
// ============================================================================

/// omega(t) = omega0
struct ConstantFrequency {
    double omega0 = 1.0;
    bool operator==(const ConstantFrequency&) const = default;
};

/// omega(t) = a + b * sin(c * t)
struct SinusoidalFrequency {
    double a = 1.0;
    double b = 0.0;
    double c = 1.0;
    bool operator==(const SinusoidalFrequency&) const = default;
};

/// omega(t) = coeffs[0] + coeffs[1] * t + ...
struct PolynomialFrequency {
    std::vector<double> coeffs;
    bool operator==(const PolynomialFrequency&) const = default;
};

/// Piecewise-linear interpolation through (t, omega) knots with strictly
/// increasing t. Evaluation outside the knot range is an error.
struct TabulatedFrequency {
    std::vector<double> t;
    std::vector<double> omega;
    bool operator==(const TabulatedFrequency&) const = default;
};

class FrequencySpec {
public:
    using Variant = std::variant<ConstantFrequency, SinusoidalFrequency,
                                 PolynomialFrequency, TabulatedFrequency>;

    FrequencySpec() : spec_(ConstantFrequency{}) {}

    static FrequencySpec constant(double omega0);
    static FrequencySpec sinusoidal(double a, double b, double c);
    static FrequencySpec polynomial(std::vector<double> coeffs);
    /// Throws InvalidArgument unless knots are nonempty, equal-length, and
    /// strictly increasing in t.
    static FrequencySpec tabulated(std::vector<double> t, std::vector<double> omega);

    [[nodiscard]] double operator()(double t) const { return eval(t); }
    [[nodiscard]] double eval(double t) const;
    [[nodiscard]] double omega_squared(double t) const {
        const double w = eval(t);
        return w * w;
    }

    [[nodiscard]] const Variant& variant() const noexcept { return spec_; }
    bool operator==(const FrequencySpec&) const = default;

private:
    explicit FrequencySpec(Variant v) : spec_(std::move(v)) {}
    Variant spec_;
};

/// Evaluates omega(t) for the given specification.
double eval_frequency(const FrequencySpec& spec, double t);

}  // namespace pinney
