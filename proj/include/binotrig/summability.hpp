#pragma once

#include "binotrig/series.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace binotrig {

/// Radius ladder and budgets for Abel summation.
struct AbelSchedule
{
    /// Strictly increasing, all in (0, 1).
    std::vector<double> radii;
    /// Degree of the extrapolating polynomial; must be < radii.size().
    int extrapolation_order = 4;
    /// Absolute tail tolerance for each moderated sum.
    double inner_tolerance = 1e-12;
    /// Per-radius term budget.
    std::int64_t max_terms = 10'000'000;

    /// r_j = 1 - 2^-j for j = 3..12, order 4.
    static AbelSchedule standard();

    /// r = 1 - 2^-e for e = first, first + step, ..., last.
    static AbelSchedule geometric(double first, double last, double step);

    /// Throws std::invalid_argument when an invariant is violated.
    void validate() const;
};

struct PowerSumResult
{
    double value = 0.0;
    std::int64_t terms = 0;
    /// Estimated absolute rounding error of the accumulated sum.
    double rounding = 0.0;
};

/// sum_k binom(n,k) r^k cos(k phi) (or sin), with compensated accumulation.
///
/// The moderated terms reach ~1e21 for n = -7 near r = 1 while the sum
/// stays O(1). Accumulation runs in double only when the largest term keeps
/// the expected rounding error far below tol, and in binary128 otherwise.
/// Stops once the
/// geometric tail bound |t_k| q / (1 - q) < tol, where q = r max(rho_k, 1)
/// and rho_k = |binom(n,k+1) / binom(n,k)|. Throws BudgetExhaustedError if
/// max_terms is reached first and std::invalid_argument unless 0 < r < 1.
PowerSumResult power_sum(const SeriesSpec& spec, double r, double tol, std::int64_t max_terms);

struct Sample
{
    double step; // h = 1 - r
    double value;
};

struct Extrapolation
{
    double value = 0.0;
    /// |P_order(0) - P_order-1(0)|, the last two Neville stages.
    double stage_difference = 0.0;
    /// sum_j |l_j(0)|, the Lagrange weights applied to the used samples.
    double weight_norm = 0.0;
};

/// Polynomial extrapolation to h = 0 through the last order + 1 samples
/// (Neville's scheme). Throws std::invalid_argument for too few samples,
/// order < 1, or repeated steps.
Extrapolation richardson(std::span<const Sample> samples, int order);

/// Abel value lim_{r->1-} of the moderated series, by power_sum at each
/// radius followed by Richardson extrapolation in h = 1 - r.
///
/// error_estimate is the Neville stage difference plus the weighted rounding
/// and tail errors of the samples; it is a heuristic, not a bound. For
/// terminating series the extrapolation order is raised to n, extending the
/// ladder geometrically toward r = 1 when it is too short, so the
/// polynomial in h is reproduced exactly.
///
/// Throws NotSummableError at a pole, DomainError outside the angle domain,
/// BudgetExhaustedError from power_sum.
SummationResult abel_sum(const SeriesSpec& spec, const AbelSchedule& schedule = AbelSchedule::standard());

/// Dispatch by convergence class: terminating series are summed directly
/// with exactly n + 1 terms; everything else goes through abel_sum, with the
/// tail tolerance tightened to tol / 100 when that is stricter than the
/// schedule's.
SummationResult auto_sum(const SeriesSpec& spec, double tol,
                         const AbelSchedule& schedule = AbelSchedule::standard());

struct HalfTurnResult
{
    SummationResult sum;
    /// cos(lambda pi/4) / 2^(lambda/2)
    double formula = 0.0;
    /// False for lambda > 8, where the formula has not been exercised.
    bool within_tested_range = true;
};

/// 1 - l(l+1)/2! + l(l+1)(l+2)(l+3)/4! - ..., i.e. the cosine series with
/// n = -lambda at phi = pi/2, where every odd-index term drops out.
/// Throws std::invalid_argument for negative or non-finite lambda.
HalfTurnResult lambda_half_turn(double lambda, const AbelSchedule& schedule = AbelSchedule::standard());

} // namespace binotrig
