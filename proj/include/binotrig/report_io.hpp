#pragma once

#include "binotrig/verify.hpp"

#include <iosfwd>
#include <string>

namespace binotrig {

/// Flattened VerificationReport, the unit of CLI output.
struct OutputRecord
{
    double n = 0.0;
    double phi_radians = 0.0;
    std::string kind;   // cos | sin
    std::string method; // direct | abel | closed_form
    double value = 0.0;
    double oracle = 0.0;
    double abs_error = 0.0;
    double rel_error = 0.0;
    std::int64_t terms_used = 0;
    double error_estimate = 0.0;
    /// Convergence class token, or "out_of_domain" / "budget_exhausted".
    std::string convergence;
    bool passed = false;
};

OutputRecord to_record(const VerificationReport& report);

/// 17 significant digits; "inf", "-inf", "nan" for non-finite values.
std::string format_number(double x);

/// One JSON object, keys in lexicographic order, no trailing newline.
/// Non-finite numbers become null.
std::string to_json(const OutputRecord& record);

inline constexpr const char* kCsvHeader =
    "n,phi_radians,kind,method,value,oracle,abs_error,rel_error,terms_used,error_estimate,class,passed";

std::string to_csv(const OutputRecord& record);

enum class OutputFormat { Json, Csv };

/// JSON lines, or CSV with header.
void write_records(std::ostream& out, const std::vector<OutputRecord>& records, OutputFormat format);

} // namespace binotrig
