#pragma once

#include "binotrig/series.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace binotrig {

enum class VerifyMethod { Direct, Abel, Auto, ClosedForm };

enum class ReportStatus {
    Evaluated,
    /// Oracle has a pole; passed iff the method also reported NotSummable.
    Pole,
    /// Angle outside the domain for this exponent; never passes.
    DomainViolation,
    BudgetExhausted,
};

struct VerificationReport
{
    SeriesSpec spec;
    /// NaN when the oracle is a pole or undefined.
    double oracle = 0.0;
    bool oracle_pole = false;
    SummationResult computed;
    double abs_error = 0.0;
    /// abs_error / |oracle|, or abs_error when the oracle is 0.
    double rel_error = 0.0;
    double tolerance = 0.0;
    /// abs_error <= tolerance * (1 + |oracle|) for evaluated reports.
    bool passed = false;
    ReportStatus status = ReportStatus::Evaluated;
    std::string diagnostic;
};

struct VerifyOptions
{
    /// Term count for VerifyMethod::Direct on non-terminating series.
    std::int64_t direct_terms = 100'000;
    std::int64_t max_terms = 10'000'000;
};

/// Sums the series by `method` and compares against the closed form.
/// Failures of any kind are recorded in the report, never thrown.
VerificationReport verify_identity(const SeriesSpec& spec, VerifyMethod method, double tol,
                                   const VerifyOptions& options = {});

/// Fills in errors and the pass flag for an already computed value.
VerificationReport compare(const SeriesSpec& spec, const SummationResult& computed, double oracle,
                           double tol);

enum class TableId { S7, S11, S12, S13, S15, S16 };

struct TableRow
{
    TableId table;
    double exponent;
    /// Nominal angle of the row.
    double angle;
    /// Angle actually evaluated; differs from `angle` only for one-sided
    /// limit rows at the branch point.
    double evaluation_angle;
    TrigKind kind;
    /// nullopt marks a divergent (pole) row.
    std::optional<double> expected;
    double tolerance;
    VerifyMethod method;
    std::string label;
};

inline constexpr TableId kAllTables[] = {TableId::S7,  TableId::S11, TableId::S12,
                                         TableId::S13, TableId::S15, TableId::S16};

/// "s7", "s11", ...
std::string_view to_token(TableId id) noexcept;
/// Throws std::invalid_argument for unknown ids.
TableId parse_table_id(std::string_view token);

/// Rows with expected values built from exact expressions.
std::vector<TableRow> table_rows(TableId id);

/// Runs every row of a table; rows are evaluated in parallel, the result is
/// in row order.
std::vector<VerificationReport> golden_table(TableId id);

/// One report per grid point, in grid order.
std::vector<VerificationReport> sweep(double n, std::span<const double> angles, TrigKind kind,
                                      VerifyMethod method, double tol, const VerifyOptions& options = {});

} // namespace binotrig
