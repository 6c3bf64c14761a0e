#include "binotrig/summability.hpp"

#include "binotrig/binomial.hpp"
#include "binotrig/closed_form.hpp"
#include "binotrig/compensated.hpp"
#include "binotrig/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace binotrig {

namespace {

using Quad = __float128;

// 2^-112, unit roundoff of binary128.
constexpr double kQuadEpsilon = 1.925929944387236e-34;


} // namespace

AbelSchedule AbelSchedule::standard()
{
    return geometric(3.0, 12.0, 1.0);
}

AbelSchedule AbelSchedule::geometric(double first, double last, double step)
{
    if (!(step > 0.0) || !(first > 0.0) || last < first)
        throw std::invalid_argument("geometric schedule needs 0 < first <= last and step > 0");
    AbelSchedule s;
    const auto count = static_cast<int>(std::floor((last - first) / step + 1e-9)) + 1;
    for (int i = 0; i < count; ++i)
        s.radii.push_back(1.0 - std::exp2(-(first + i * step)));
    return s;
}

void AbelSchedule::validate() const
{
    if (radii.empty())
        throw std::invalid_argument("schedule has no radii");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0 && radii[i] < 1.0))
            throw std::invalid_argument("schedule radii must lie in (0, 1)");
        if (i > 0 && !(radii[i] > radii[i - 1]))
            throw std::invalid_argument("schedule radii must be strictly increasing");
    }
    if (extrapolation_order < 1 || static_cast<std::size_t>(extrapolation_order) >= radii.size())
        throw std::invalid_argument("extrapolation order must be in [1, radii.size())");
    if (!(inner_tolerance > 0.0))
        throw std::invalid_argument("inner tolerance must be positive");
    if (max_terms < 1)
        throw std::invalid_argument("max_terms must be positive");
}

namespace {

// Largest |binom(n,k)| r^k, found by walking the magnitudes up to the point
// where the ratio drops below 1 for good.
double peak_magnitude(double n, double r, std::int64_t max_terms)
{
    double m = 1.0, peak = 1.0;
    for (std::int64_t k = 0; k < max_terms; ++k) {
        const double kd = static_cast<double>(k);
        const double q = r * std::abs(n - kd) / (kd + 1.0);
        if (kd >= std::max(n, 0.0) && (q < 1.0 || m == 0.0))
            break;
        m *= q;
        peak = std::max(peak, m);
    }
    return peak;
}

// Accumulates t_k = binom(n,k) w^k with w = r e^{i phi} in `Real`. The real
// part feeds the cosine series, the imaginary part the sine series.
template <typename Real>
PowerSumResult moderated_sum(const SeriesSpec& spec, double r, double tol, std::int64_t max_terms,
                             double unit_roundoff)
{
    const double n = spec.exponent;
    const Real wr = Real(r) * Real(std::cos(spec.angle));
    const Real wi = Real(r) * Real(std::sin(spec.angle));
    const Real rn = n;
    const bool cosine = spec.kind == TrigKind::Cosine;
    const double start = std::max(n, 0.0);

    Real tr = 1, ti = 0;
    CompensatedSum<Real> acc;
    double magnitude = 0.0;
    for (std::int64_t k = 0; k < max_terms; ++k) {
        acc += cosine ? tr : ti;
        const double mag = std::abs(static_cast<double>(tr)) + std::abs(static_cast<double>(ti));
        magnitude += mag;

        const double kd = static_cast<double>(k);
        if (kd >= start) {
            // Past n the ratios rho_k decrease to 1 (n < -1) or increase to 1
            // (n > -1), so q bounds every later ratio.
            const double rho = std::abs(n - kd) / (kd + 1.0);
            const double q = r * std::max(rho, 1.0);
            if (mag == 0.0 || (q < 1.0 && mag * q / (1.0 - q) < tol)) {
                const auto terms = k + 1;
                return {static_cast<double>(acc.value()), terms,
                        unit_roundoff * magnitude / std::sqrt(static_cast<double>(terms))};
            }
        }

        const Real factor = (rn - Real(kd)) / Real(kd + 1.0);
        const Real ar = tr * factor;
        const Real ai = ti * factor;
        tr = ar * wr - ai * wi;
        ti = ar * wi + ai * wr;
    }
    throw BudgetExhaustedError("power_sum exhausted " + std::to_string(max_terms) + " terms at r = " +
                                   std::to_string(r),
                               max_terms);
}

} // namespace

PowerSumResult power_sum(const SeriesSpec& spec, double r, double tol, std::int64_t max_terms)
{
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("power_sum radius must lie in (0, 1)");
    if (!(tol > 0.0))
        throw std::invalid_argument("power_sum tolerance must be positive");
    if (!std::isfinite(spec.exponent) || !std::isfinite(spec.angle))
        throw DomainError("exponent and angle must be finite");

    // Double suffices while the largest moderated term is small; otherwise the
    // cancellation (terms ~1e21 for n = -7 near r = 1, sum O(1)) needs binary128.
    constexpr double double_roundoff = std::numeric_limits<double>::epsilon() / 2;
    if (double_roundoff * peak_magnitude(spec.exponent, r, max_terms) * 1e3 <= tol)
        return moderated_sum<double>(spec, r, tol, max_terms, double_roundoff);
    return moderated_sum<Quad>(spec, r, tol, max_terms, kQuadEpsilon);
}

Extrapolation richardson(std::span<const Sample> samples, int order)
{
    if (order < 1)
        throw std::invalid_argument("extrapolation order must be at least 1");
    if (samples.size() < static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("richardson needs at least order + 1 samples");
    const auto used = samples.subspan(samples.size() - static_cast<std::size_t>(order) - 1);
    const std::size_t m = used.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (used[i].step == used[j].step)
                throw std::invalid_argument("richardson needs distinct steps");

    // Neville tableau evaluated at h = 0; p[i] holds P_{i..i+stage}.
    std::vector<double> p(m);
    for (std::size_t i = 0; i < m; ++i)
        p[i] = used[i].value;
    double previous_last = p[m - 1];
    for (std::size_t stage = 1; stage < m; ++stage) {
        for (std::size_t i = 0; i + stage < m; ++i) {
            const double hi = used[i].step;
            const double hj = used[i + stage].step;
            p[i] = (hi * p[i + 1] - hj * p[i]) / (hi - hj);
        }
        if (stage == m - 2)
            previous_last = p[1];
    }

    Extrapolation out;
    out.value = p[0];
    out.stage_difference = m >= 2 ? std::abs(p[0] - previous_last) : 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double w = 1.0;
        for (std::size_t i = 0; i < m; ++i)
            if (i != j)
                w *= used[i].step / (used[i].step - used[j].step);
        out.weight_norm += std::abs(w);
    }
    return out;
}

SummationResult abel_sum(const SeriesSpec& spec, const AbelSchedule& schedule)
{
    schedule.validate();
    check_domain(spec);
    const ConvergenceClass cls = classify(spec);

    std::vector<double> radii = schedule.radii;
    int order = schedule.extrapolation_order;
    if (cls.kind == ConvergenceKind::Terminating) {
        // Moderated sum is a polynomial of degree n in h; n + 1 radii
        // reproduce it exactly. Continue the ladder's last ratio if needed.
        const auto degree = static_cast<std::size_t>(cls.term_count - 1);
        while (radii.size() < degree + 1) {
            const double h_last = 1.0 - radii.back();
            const double h_prev = radii.size() > 1 ? 1.0 - radii[radii.size() - 2] : 2.0 * h_last;
            radii.push_back(1.0 - h_last * (h_last / h_prev));
        }
        order = std::max(order, static_cast<int>(degree));
    }

    std::vector<Sample> samples;
    samples.reserve(radii.size());
    std::int64_t terms = 0;
    double sample_error = 0.0;
    const std::size_t first_used = radii.size() - static_cast<std::size_t>(order) - 1;
    for (std::size_t j = 0; j < radii.size(); ++j) {
        const double r = radii[j];
        const PowerSumResult ps = power_sum(spec, r, schedule.inner_tolerance, schedule.max_terms);
        samples.push_back({1.0 - r, ps.value});
        terms += ps.terms;
        if (j >= first_used) {
            const double err = schedule.inner_tolerance + ps.rounding +
                               std::numeric_limits<double>::epsilon() * std::abs(ps.value);
            sample_error = std::max(sample_error, err);
        }
    }

    const Extrapolation ex = richardson(samples, order);
    SummationResult result;
    result.value = ex.value;
    result.method = SumMethod::Abel;
    result.terms_used = terms;
    result.error_estimate = ex.stage_difference + ex.weight_norm * sample_error;
    result.convergence = cls;
    return result;
}

SummationResult auto_sum(const SeriesSpec& spec, double tol, const AbelSchedule& schedule)
{
    if (!(tol > 0.0))
        throw std::invalid_argument("tolerance must be positive");
    check_domain(spec);
    const ConvergenceClass cls = classify(spec);
    if (cls.kind == ConvergenceKind::Terminating)
        return partial_sum(spec, cls.term_count);

    AbelSchedule tuned = schedule;
    tuned.inner_tolerance = std::min(schedule.inner_tolerance, tol / 100.0);
    return abel_sum(spec, tuned);
}

HalfTurnResult lambda_half_turn(double lambda, const AbelSchedule& schedule)
{
    if (!std::isfinite(lambda) || lambda < 0.0)
        throw std::invalid_argument("lambda must be finite and nonnegative");
    HalfTurnResult out;
    const SeriesSpec spec{-lambda, std::numbers::pi / 2.0, TrigKind::Cosine};
    out.sum = auto_sum(spec, 100.0 * schedule.inner_tolerance, schedule);
    out.formula = std::cos(lambda * std::numbers::pi / 4.0) / std::exp2(0.5 * lambda);
    out.within_tested_range = lambda <= 8.0;
    return out;
}

} // namespace binotrig
