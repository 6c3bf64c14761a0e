#include "binotrig/closed_form.hpp"

#include "binotrig/binomial.hpp"
#include "binotrig/errors.hpp"
#include "binotrig/series.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace binotrig {

namespace {

double integer_power(double base, std::int64_t e)
{
    const bool invert = e < 0;
    std::uint64_t m = invert ? static_cast<std::uint64_t>(-(e + 1)) + 1u : static_cast<std::uint64_t>(e);
    // Sign is carried by base itself through the squarings.
    double result = 1.0;
    while (m != 0) {
        if (m & 1u)
            result *= base;
        base *= base;
        m >>= 1u;
    }
    return invert ? 1.0 / result : result;
}

// (2 cos(phi/2))^n, with pole detection.
OracleValue modulus_power(double n, double phi)
{
    if (!std::isfinite(n) || !std::isfinite(phi))
        throw DomainError("closed form needs finite exponent and angle");
    const double half = std::cos(0.5 * phi);
    if (n < 0.0 && std::abs(half) < kPoleTolerance)
        return {0.0, true};
    if (is_integer(n))
        return {integer_power(2.0 * half, static_cast<std::int64_t>(n)), false};
    if (std::abs(phi) >= std::numbers::pi)
        throw DomainError("non-integer exponent requires -pi < phi < pi");
    return {std::exp2(n) * std::exp(n * std::log(half)), false};
}

} // namespace

OracleValue closed_cos(double n, double phi)
{
    OracleValue m = modulus_power(n, phi);
    if (!m.pole)
        m.value *= std::cos(0.5 * n * phi);
    return m;
}

OracleValue closed_sin(double n, double phi)
{
    OracleValue m = modulus_power(n, phi);
    if (!m.pole)
        m.value *= std::sin(0.5 * n * phi);
    return m;
}

double rational_cross_check(int n, double phi)
{
    if (n != -2 && n != -3)
        throw std::invalid_argument("rational form exists only for n = -2 and n = -3");
    if (at_half_angle_pole(phi))
        throw NotSummableError("rational form has a pole at phi = +-pi", pole_angle(phi));
    const double c = std::cos(phi);
    if (n == -2)
        return c / (2.0 * (1.0 + c));
    return (2.0 * c - 1.0) / (4.0 * (1.0 + c));
}

double phi90_value(double n)
{
    if (!std::isfinite(n))
        throw std::invalid_argument("exponent must be finite");
    return std::exp2(0.5 * n) * std::cos(n * std::numbers::pi / 4.0);
}

} // namespace binotrig
