#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace binotrig {

enum class TrigKind { Cosine, Sine };

/// One member of the family sum_k binom(n,k) cos(k phi) (or sin(k phi)).
///
/// For non-integer n the canonical angle domain is -pi < phi < pi, where
/// cos(phi/2) > 0 and real powers of it are single valued. Integer n accepts
/// any finite phi. The struct itself does not enforce the domain; the
/// evaluating operations do (see check_domain).
struct SeriesSpec
{
    double exponent = 0.0;
    double angle = 0.0;
    TrigKind kind = TrigKind::Cosine;
};

enum class ConvergenceKind { Terminating, Absolute, Conditional, AbelSummable, NotSummable };

struct ConvergenceClass
{
    ConvergenceKind kind = ConvergenceKind::Absolute;
    /// n + 1 for Terminating, 0 otherwise.
    std::int64_t term_count = 0;

    static ConvergenceClass terminating(std::int64_t count) { return {ConvergenceKind::Terminating, count}; }
    static ConvergenceClass of(ConvergenceKind k) { return {k, 0}; }

    friend bool operator==(const ConvergenceClass&, const ConvergenceClass&) = default;
};

enum class SumMethod { Direct, Abel, ClosedForm };

struct SummationResult
{
    double value = 0.0;
    SumMethod method = SumMethod::Direct;
    std::int64_t terms_used = 0;
    /// Bound on |value - true sum| under the method's assumptions. Exactly 0
    /// only for complete terminating sums and closed forms; +inf when the
    /// direct partial sums diverge.
    double error_estimate = 0.0;
    ConvergenceClass convergence;
};

inline constexpr double kPoleTolerance = 1e-12;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// |cos(phi/2)| < kPoleTolerance.
bool at_half_angle_pole(double phi) noexcept;

/// +pi or -pi, whichever odd multiple of pi is nearest phi's sign.
double pole_angle(double phi) noexcept;

/// Throws DomainError for non-finite parameters or non-integer n with
/// |phi| >= pi, and NotSummableError for n < 0 at a pole. The pole check
/// runs first so that (n = -1/2, phi = pi) reports the pole.
void check_domain(const SeriesSpec& spec);

/// binom(n,k) cos(k phi) or binom(n,k) sin(k phi).
double term(const SeriesSpec& spec, std::int64_t k);

/// Compensated sum of the first `count` terms.
///
/// error_estimate by class:
///  - Terminating: sum of |omitted terms| (0 once count >= n + 1).
///  - Absolute: min(|binom(n-1, N-1)|, |binom(n, N)| / |cos(phi/2)|) for
///    the omitted tail starting at N > n, plus any omitted terms below n.
///    The first is the exact sum of |coefficients| in the tail; the second
///    follows from summation by parts because the tail coefficients
///    alternate with decreasing magnitude.
///  - Conditional: |binom(n, N)| / |cos(phi/2)| (summation by parts). At
///    phi = 0 this is the first omitted term.
///  - AbelSummable, NotSummable: +inf.
///
/// Throws std::invalid_argument for count < 1.
SummationResult partial_sum(const SeriesSpec& spec, std::int64_t count);

ConvergenceClass classify(const SeriesSpec& spec);

std::string_view to_token(TrigKind kind) noexcept;
std::string_view to_token(ConvergenceKind kind) noexcept;
std::string_view to_token(SumMethod method) noexcept;

} // namespace binotrig
