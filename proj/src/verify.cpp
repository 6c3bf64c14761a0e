#include "binotrig/verify.hpp"

#include "binotrig/closed_form.hpp"
#include "binotrig/errors.hpp"
#include "binotrig/summability.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace binotrig {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = std::numbers::pi;

// Offset from pi used for the one-sided limit row of the half exponent.
constexpr double kLimitOffset = 1e-4;

template <typename Fn>
auto parallel_map(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}))>
{
    std::vector<decltype(fn(std::size_t{}))> out(count);
    const std::size_t workers =
        std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
                out[i] = fn(i);
        });
    pool.clear();
    return out;
}

SummationResult not_summable_result(SumMethod method)
{
    SummationResult r;
    r.value = kNaN;
    r.method = method;
    r.error_estimate = kInfinity;
    r.convergence = ConvergenceClass::of(ConvergenceKind::NotSummable);
    return r;
}

SumMethod method_tag(VerifyMethod m)
{
    switch (m) {
    case VerifyMethod::Direct: return SumMethod::Direct;
    case VerifyMethod::Abel:
    case VerifyMethod::Auto: return SumMethod::Abel;
    case VerifyMethod::ClosedForm: return SumMethod::ClosedForm;
    }
    return SumMethod::Direct;
}

// Runs the requested method. NotSummableError is folded into the result;
// DomainError and BudgetExhaustedError propagate.
SummationResult evaluate(const SeriesSpec& spec, VerifyMethod method, double tol, double oracle,
                         const VerifyOptions& options)
{
    AbelSchedule schedule = AbelSchedule::standard();
    schedule.max_terms = options.max_terms;
    try {
        switch (method) {
        case VerifyMethod::Direct: {
            const ConvergenceClass cls = classify(spec);
            const auto count =
                cls.kind == ConvergenceKind::Terminating ? cls.term_count : options.direct_terms;
            return partial_sum(spec, count);
        }
        case VerifyMethod::Abel: return abel_sum(spec, schedule);
        case VerifyMethod::Auto: return auto_sum(spec, tol, schedule);
        case VerifyMethod::ClosedForm: {
            check_domain(spec);
            SummationResult r;
            r.value = oracle;
            r.method = SumMethod::ClosedForm;
            r.convergence = classify(spec);
            return r;
        }
        }
    } catch (const NotSummableError&) {
        return not_summable_result(method_tag(method));
    }
    throw std::logic_error("unhandled verification method");
}

VerificationReport failed_report(const SeriesSpec& spec, VerifyMethod method, double tol,
                                 ReportStatus status, std::string diagnostic)
{
    VerificationReport rep;
    rep.spec = spec;
    rep.oracle = kNaN;
    rep.computed.value = kNaN;
    rep.computed.method = method_tag(method);
    rep.computed.error_estimate = kInfinity;
    rep.computed.convergence = classify(spec);
    rep.abs_error = kNaN;
    rep.rel_error = kNaN;
    rep.tolerance = tol;
    rep.passed = false;
    rep.status = status;
    rep.diagnostic = std::move(diagnostic);
    return rep;
}

// Shared by verify_identity and table rows: `oracle` empty means pole.
VerificationReport run_check(const SeriesSpec& spec, VerifyMethod method, double tol,
                             std::optional<double> oracle, const VerifyOptions& options)
{
    try {
        if (!oracle) {
            VerificationReport rep;
            rep.spec = spec;
            rep.oracle = kNaN;
            rep.oracle_pole = true;
            rep.computed = evaluate(spec, method, tol, kNaN, options);
            rep.abs_error = kNaN;
            rep.rel_error = kNaN;
            rep.tolerance = tol;
            rep.status = ReportStatus::Pole;
            rep.passed = rep.computed.convergence.kind == ConvergenceKind::NotSummable;
            rep.diagnostic = rep.passed ? "pole at phi = +-pi; method reports not summable"
                                        : "pole at phi = +-pi; method returned a value";
            return rep;
        }
        return compare(spec, evaluate(spec, method, tol, *oracle, options), *oracle, tol);
    } catch (const BudgetExhaustedError& e) {
        return failed_report(spec, method, tol, ReportStatus::BudgetExhausted, e.what());
    } catch (const DomainError& e) {
        return failed_report(spec, method, tol, ReportStatus::DomainViolation, e.what());
    }
}

} // namespace

VerificationReport compare(const SeriesSpec& spec, const SummationResult& computed, double oracle,
                           double tol)
{
    VerificationReport rep;
    rep.spec = spec;
    rep.oracle = oracle;
    rep.computed = computed;
    rep.tolerance = tol;
    rep.abs_error = std::abs(computed.value - oracle);
    rep.rel_error = oracle != 0.0 ? rep.abs_error / std::abs(oracle) : rep.abs_error;
    rep.passed = rep.abs_error <= tol * (1.0 + std::abs(oracle));
    rep.status = ReportStatus::Evaluated;
    return rep;
}

VerificationReport verify_identity(const SeriesSpec& spec, VerifyMethod method, double tol,
                                   const VerifyOptions& options)
{
    OracleValue o;
    try {
        o = spec.kind == TrigKind::Cosine ? closed_cos(spec.exponent, spec.angle)
                                          : closed_sin(spec.exponent, spec.angle);
    } catch (const DomainError& e) {
        return failed_report(spec, method, tol, ReportStatus::DomainViolation, e.what());
    }
    return run_check(spec, method, tol, o.pole ? std::nullopt : std::optional<double>(o.value), options);
}

std::string_view to_token(TableId id) noexcept
{
    switch (id) {
    case TableId::S7: return "s7";
    case TableId::S11: return "s11";
    case TableId::S12: return "s12";
    case TableId::S13: return "s13";
    case TableId::S15: return "s15";
    case TableId::S16: return "s16";
    }
    return "unknown";
}

TableId parse_table_id(std::string_view token)
{
    for (TableId id : kAllTables)
        if (to_token(id) == token)
            return id;
    throw std::invalid_argument("unknown table id: " + std::string(token));
}

namespace {

double half_cos(double phi) { return std::cos(0.5 * phi); }

std::vector<TableRow> integer_rows()
{
    // Hand-reduced forms of the n = 0..4 cosine sums.
    std::vector<TableRow> rows;
    for (double phi : {kPi / 6.0, 0.7, 2.0 * kPi / 3.0}) {
        const double c = half_cos(phi);
        const double forms[] = {
            1.0,
            2.0 * c * c,
            4.0 * c * c * std::cos(phi),
            8.0 * c * c * c * std::cos(1.5 * phi),
            16.0 * c * c * c * c * std::cos(2.0 * phi),
        };
        for (int n = 0; n <= 4; ++n)
            rows.push_back({TableId::S7, double(n), phi, phi, TrigKind::Cosine, forms[n], 1e-12,
                            VerifyMethod::Direct, "finite sum, n=" + std::to_string(n)});
    }
    return rows;
}

std::vector<TableRow> negative_integer_rows()
{
    std::vector<TableRow> rows;
    for (double phi : {kPi / 3.0, 2.0 * kPi / 3.0}) {
        const double c = half_cos(phi);
        const double cp = std::cos(phi);
        const double forms[] = {
            0.5,
            cp / (2.0 * (1.0 + cp)),
            (-1.0 + 2.0 * cp) / (4.0 * (1.0 + cp)),
            std::cos(2.0 * phi) / (16.0 * std::pow(c, 4)),
            std::cos(2.5 * phi) / (32.0 * std::pow(c, 5)),
            std::cos(3.0 * phi) / (64.0 * std::pow(c, 6)),
            std::cos(3.5 * phi) / (128.0 * std::pow(c, 7)),
        };
        for (int i = 0; i < 7; ++i)
            rows.push_back({TableId::S11, double(-(i + 1)), phi, phi, TrigKind::Cosine, forms[i], 1e-6,
                            VerifyMethod::Abel, "divergent, n=" + std::to_string(-(i + 1))});
    }
    return rows;
}

std::vector<TableRow> half_rows()
{
    const double s2 = std::sqrt(2.0);
    const double s3 = std::sqrt(3.0);
    const auto row = [](double phi, double eval_phi, double expected, double tol, std::string label) {
        return TableRow{TableId::S12, 0.5,  phi, eval_phi, TrigKind::Cosine, expected, tol,
                        VerifyMethod::Auto, std::move(label)};
    };
    return {
        row(0.0, 0.0, s2, 1e-8, "n=1/2 at 0 deg: sqrt 2"),
        row(kPi, kPi - kLimitOffset, 0.0, 1e-2, "n=1/2 at 180 deg: limit (1-1)^(1/2) = 0"),
        row(kPi / 2.0, kPi / 2.0, std::sqrt((1.0 + s2) / 2.0), 1e-8, "n=1/2 at 90 deg: sqrt((1+sqrt 2)/2)"),
        row(kPi / 3.0, kPi / 3.0, 0.5 * std::sqrt(3.0 + 2.0 * s3), 1e-8, "n=1/2 at 60 deg: sqrt(3+2 sqrt 3)/2"),
    };
}

std::vector<TableRow> negative_half_rows()
{
    const double s2 = std::sqrt(2.0);
    const auto row = [](double phi, std::optional<double> expected, std::string label) {
        return TableRow{TableId::S13, -0.5, phi, phi, TrigKind::Cosine, expected, 1e-8,
                        VerifyMethod::Auto, std::move(label)};
    };
    return {
        row(0.0, 1.0 / s2, "n=-1/2 at 0 deg: 1/sqrt 2"),
        row(kPi, std::nullopt, "n=-1/2 at 180 deg: diverges"),
        row(kPi / 2.0, 0.5 * std::sqrt(1.0 + s2), "n=-1/2 at 90 deg: sqrt(1+sqrt 2)/2"),
    };
}

std::vector<TableRow> quarter_turn_integer_rows()
{
    const double values[] = {1, 1, 0, -2, -4, -4, 0, 8, 16};
    std::vector<TableRow> rows;
    for (int n = 0; n <= 8; ++n)
        rows.push_back({TableId::S15, double(n), kPi / 2.0, kPi / 2.0, TrigKind::Cosine, values[n], 1e-12,
                        VerifyMethod::Direct, "90 deg, n=" + std::to_string(n)});
    return rows;
}

std::vector<TableRow> quarter_turn_negative_rows()
{
    const double values[] = {0.5, 0.0, -0.25, -0.25, -0.125, 0.0};
    std::vector<TableRow> rows;
    for (int i = 0; i < 6; ++i)
        rows.push_back({TableId::S16, double(-(i + 1)), kPi / 2.0, kPi / 2.0, TrigKind::Cosine, values[i],
                        1e-6, VerifyMethod::Abel, "90 deg, n=" + std::to_string(-(i + 1))});
    return rows;
}

} // namespace

std::vector<TableRow> table_rows(TableId id)
{
    switch (id) {
    case TableId::S7: return integer_rows();
    case TableId::S11: return negative_integer_rows();
    case TableId::S12: return half_rows();
    case TableId::S13: return negative_half_rows();
    case TableId::S15: return quarter_turn_integer_rows();
    case TableId::S16: return quarter_turn_negative_rows();
    }
    throw std::invalid_argument("unknown table id");
}

std::vector<VerificationReport> golden_table(TableId id)
{
    const std::vector<TableRow> rows = table_rows(id);
    return parallel_map(rows.size(), [&](std::size_t i) {
        const TableRow& row = rows[i];
        const SeriesSpec spec{row.exponent, row.evaluation_angle, row.kind};
        VerificationReport rep = run_check(spec, row.method, row.tolerance, row.expected, {});
        if (rep.diagnostic.empty())
            rep.diagnostic = row.label;
        return rep;
    });
}

std::vector<VerificationReport> sweep(double n, std::span<const double> angles, TrigKind kind,
                                      VerifyMethod method, double tol, const VerifyOptions& options)
{
    return parallel_map(angles.size(), [&](std::size_t i) {
        return verify_identity(SeriesSpec{n, angles[i], kind}, method, tol, options);
    });
}

} // namespace binotrig
