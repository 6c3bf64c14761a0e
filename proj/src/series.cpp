#include "binotrig/series.hpp"

#include "binotrig/binomial.hpp"
#include "binotrig/compensated.hpp"
#include "binotrig/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace binotrig {

bool at_half_angle_pole(double phi) noexcept
{
    return std::abs(std::cos(0.5 * phi)) < kPoleTolerance;
}

double pole_angle(double phi) noexcept
{
    return phi < 0.0 ? -std::numbers::pi : std::numbers::pi;
}

void check_domain(const SeriesSpec& spec)
{
    const double n = spec.exponent;
    const double phi = spec.angle;
    if (!std::isfinite(n) || !std::isfinite(phi))
        throw DomainError("exponent and angle must be finite");
    if (n < 0.0 && at_half_angle_pole(phi))
        throw NotSummableError("pole: negative exponent with cos(phi/2) = 0 (phi = +-pi)",
                               pole_angle(phi));
    if (!is_integer(n) && std::abs(phi) >= std::numbers::pi)
        throw DomainError("non-integer exponent requires -pi < phi < pi");
}

double term(const SeriesSpec& spec, std::int64_t k)
{
    const double c = binom(spec.exponent, k);
    const double angle = static_cast<double>(k) * spec.angle;
    return spec.kind == TrigKind::Cosine ? c * std::cos(angle) : c * std::sin(angle);
}

ConvergenceClass classify(const SeriesSpec& spec)
{
    const double n = spec.exponent;
    if (is_nonnegative_integer(n))
        return ConvergenceClass::terminating(static_cast<std::int64_t>(n) + 1);
    if (n > 0.0)
        return ConvergenceClass::of(ConvergenceKind::Absolute);
    if (at_half_angle_pole(spec.angle))
        return ConvergenceClass::of(ConvergenceKind::NotSummable);
    if (n > -1.0)
        return ConvergenceClass::of(ConvergenceKind::Conditional);
    return ConvergenceClass::of(ConvergenceKind::AbelSummable);
}

namespace {

double trig(TrigKind kind, double x)
{
    return kind == TrigKind::Cosine ? std::cos(x) : std::sin(x);
}

// Bound on the tail starting at index `first` for non-integer n > -1.
double alternating_tail_bound(const SeriesSpec& spec, std::int64_t first, ConvergenceKind kind)
{
    const double n = spec.exponent;
    const double half = std::abs(std::cos(0.5 * spec.angle));
    // Coefficients alternate with decreasing magnitude only past n.
    const auto start = std::max<std::int64_t>(first, static_cast<std::int64_t>(std::floor(n)) + 1);
    double head = 0.0;
    CoefficientStream s(n);
    while (s.index() < first)
        s.advance();
    while (s.index() < start) {
        head += std::abs(s.current());
        s.advance();
    }
    double tail = half > 0.0 ? std::abs(s.current()) / half : kInfinity;
    if (kind == ConvergenceKind::Absolute)
        tail = std::min(tail, std::abs(binom(n - 1.0, start - 1)));
    return head + tail;
}

} // namespace

SummationResult partial_sum(const SeriesSpec& spec, std::int64_t count)
{
    if (count < 1)
        throw std::invalid_argument("partial_sum needs at least one term");

    SummationResult result;
    result.method = SumMethod::Direct;
    result.terms_used = count;
    result.convergence = classify(spec);

    CompensatedSum<double> acc;
    CoefficientStream s(spec.exponent);
    for (std::int64_t k = 0; k < count; ++k) {
        acc += s.current() * trig(spec.kind, static_cast<double>(k) * spec.angle);
        s.advance();
    }
    result.value = acc.value();

    switch (result.convergence.kind) {
    case ConvergenceKind::Terminating: {
        double omitted = 0.0;
        for (std::int64_t k = count; k < result.convergence.term_count; ++k) {
            omitted += std::abs(s.current());
            s.advance();
        }
        result.error_estimate = omitted;
        break;
    }
    case ConvergenceKind::Absolute:
    case ConvergenceKind::Conditional:
        result.error_estimate = alternating_tail_bound(spec, count, result.convergence.kind);
        break;
    case ConvergenceKind::AbelSummable:
    case ConvergenceKind::NotSummable:
        result.error_estimate = kInfinity;
        break;
    }
    return result;
}

std::string_view to_token(TrigKind kind) noexcept
{
    return kind == TrigKind::Cosine ? "cos" : "sin";
}

std::string_view to_token(ConvergenceKind kind) noexcept
{
    switch (kind) {
    case ConvergenceKind::Terminating: return "terminating";
    case ConvergenceKind::Absolute: return "absolute";
    case ConvergenceKind::Conditional: return "conditional";
    case ConvergenceKind::AbelSummable: return "abel_summable";
    case ConvergenceKind::NotSummable: return "not_summable";
    }
    return "unknown";
}

std::string_view to_token(SumMethod method) noexcept
{
    switch (method) {
    case SumMethod::Direct: return "direct";
    case SumMethod::Abel: return "abel";
    case SumMethod::ClosedForm: return "closed_form";
    }
    return "unknown";
}

} // namespace binotrig
