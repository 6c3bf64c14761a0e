#include "binotrig/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace binotrig {

OutputRecord to_record(const VerificationReport& report)
{
    OutputRecord r;
    r.n = report.spec.exponent;
    r.phi_radians = report.spec.angle;
    r.kind = std::string(to_token(report.spec.kind));
    r.method = std::string(to_token(report.computed.method));
    r.value = report.computed.value;
    r.oracle = report.oracle;
    r.abs_error = report.abs_error;
    r.rel_error = report.rel_error;
    r.terms_used = report.computed.terms_used;
    r.error_estimate = report.computed.error_estimate;
    switch (report.status) {
    case ReportStatus::DomainViolation: r.convergence = "out_of_domain"; break;
    case ReportStatus::BudgetExhausted: r.convergence = "budget_exhausted"; break;
    default: r.convergence = std::string(to_token(report.computed.convergence.kind)); break;
    }
    r.passed = report.passed;
    return r;
}

std::string format_number(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    if (x == 0.0)
        x = 0.0; // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string json_number(double x)
{
    return std::isfinite(x) ? format_number(x) : "null";
}

std::string json_string(const std::string& s)
{
    // Tokens are plain ASCII identifiers; no escaping needed.
    return '"' + s + '"';
}

} // namespace

std::string to_json(const OutputRecord& r)
{
    std::string s = "{";
    s += "\"abs_error\":" + json_number(r.abs_error);
    s += ",\"class\":" + json_string(r.convergence);
    s += ",\"error_estimate\":" + json_number(r.error_estimate);
    s += ",\"kind\":" + json_string(r.kind);
    s += ",\"method\":" + json_string(r.method);
    s += ",\"n\":" + json_number(r.n);
    s += ",\"oracle\":" + json_number(r.oracle);
    s += ",\"passed\":" + std::string(r.passed ? "true" : "false");
    s += ",\"phi_radians\":" + json_number(r.phi_radians);
    s += ",\"rel_error\":" + json_number(r.rel_error);
    s += ",\"terms_used\":" + std::to_string(r.terms_used);
    s += ",\"value\":" + json_number(r.value);
    s += "}";
    return s;
}

std::string to_csv(const OutputRecord& r)
{
    std::string s;
    s += format_number(r.n) + ',';
    s += format_number(r.phi_radians) + ',';
    s += r.kind + ',';
    s += r.method + ',';
    s += format_number(r.value) + ',';
    s += format_number(r.oracle) + ',';
    s += format_number(r.abs_error) + ',';
    s += format_number(r.rel_error) + ',';
    s += std::to_string(r.terms_used) + ',';
    s += format_number(r.error_estimate) + ',';
    s += r.convergence + ',';
    s += r.passed ? "true" : "false";
    return s;
}

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, OutputFormat format)
{
    if (format == OutputFormat::Csv)
        out << kCsvHeader << '\n';
    for (const auto& r : records)
        out << (format == OutputFormat::Json ? to_json(r) : to_csv(r)) << '\n';
}

} // namespace binotrig
