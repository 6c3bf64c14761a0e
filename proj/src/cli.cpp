#include "binotrig/cli.hpp"

#include "binotrig/report_io.hpp"
#include "binotrig/verify.hpp"

#include <CLI11.hpp>

#include <map>
#include <numbers>
#include <ostream>

namespace binotrig::cli {

namespace {

double degrees_to_radians(double deg)
{
    return deg / 180.0 * std::numbers::pi;
}

const std::map<std::string, TrigKind> kKinds{{"cos", TrigKind::Cosine}, {"sin", TrigKind::Sine}};
const std::map<std::string, VerifyMethod> kMethods{{"direct", VerifyMethod::Direct},
                                                   {"abel", VerifyMethod::Abel},
                                                   {"closed", VerifyMethod::ClosedForm},
                                                   {"auto", VerifyMethod::Auto}};
const std::map<std::string, OutputFormat> kFormats{{"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

struct SeriesFlags
{
    double n = 0.0;
    std::string kind = "cos";
    std::string method = "auto";
    std::int64_t terms = 100'000;
    std::int64_t max_terms = 10'000'000;
    double tol = 1e-8;
    std::string format = "json";
};

void add_series_flags(CLI::App* cmd, SeriesFlags& f)
{
    cmd->add_option("--n", f.n, "Exponent n")->required();
    cmd->add_option("--kind", f.kind, "Series kind")->check(CLI::IsMember({"cos", "sin"}))->capture_default_str();
    cmd->add_option("--method", f.method, "Summation method")
        ->check(CLI::IsMember({"direct", "abel", "closed", "auto"}))
        ->capture_default_str();
    cmd->add_option("--terms", f.terms, "Term count for --method direct")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-terms", f.max_terms, "Per-radius term budget for Abel summation")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--tol", f.tol, "Pass threshold")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
}

VerifyOptions options_of(const SeriesFlags& f)
{
    return VerifyOptions{f.terms, f.max_terms};
}

// eval and verify: one record, or a diagnostic with exit 2/3.
int single(const SeriesFlags& f, double phi, bool verifying, std::ostream& out, std::ostream& err)
{
    const SeriesSpec spec{f.n, phi, kKinds.at(f.kind)};
    const VerificationReport rep = verify_identity(spec, kMethods.at(f.method), f.tol, options_of(f));
    switch (rep.status) {
    case ReportStatus::Pole:
        err << "domain error: negative exponent at cos(phi/2) = 0; the series is not summable\n";
        return kExitDomain;
    case ReportStatus::DomainViolation:
        err << "domain error: " << rep.diagnostic << '\n';
        return kExitDomain;
    case ReportStatus::BudgetExhausted:
        err << "budget exhausted: " << rep.diagnostic << '\n';
        return kExitBudget;
    case ReportStatus::Evaluated: break;
    }
    write_records(out, {to_record(rep)}, kFormats.at(f.format));
    if (verifying && !rep.passed) {
        err << "verification failed: abs_error " << format_number(rep.abs_error) << " exceeds tolerance\n";
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Binomial multiple-angle series: evaluation, Abel summation and verification"};
    app.require_subcommand(1);

    SeriesFlags eval_flags;
    double eval_deg = 0.0, eval_rad = 0.0;
    auto* eval = app.add_subcommand("eval", "Sum one series and print a record");
    add_series_flags(eval, eval_flags);
    auto* eval_deg_opt = eval->add_option("--phi-deg", eval_deg, "Angle in degrees");
    auto* eval_rad_opt = eval->add_option("--phi-rad", eval_rad, "Angle in radians");
    eval_deg_opt->excludes(eval_rad_opt);

    SeriesFlags verify_flags;
    double verify_deg = 0.0, verify_rad = 0.0;
    auto* verify = app.add_subcommand("verify", "Compare one series against its closed form");
    add_series_flags(verify, verify_flags);
    auto* verify_deg_opt = verify->add_option("--phi-deg", verify_deg, "Angle in degrees");
    auto* verify_rad_opt = verify->add_option("--phi-rad", verify_rad, "Angle in radians");
    verify_deg_opt->excludes(verify_rad_opt);

    std::string table_id;
    std::string table_format = "json";
    auto* table = app.add_subcommand("table", "Reproduce one golden table");
    table->add_option("--id", table_id, "s7|s11|s12|s13|s15|s16")->required();
    table->add_option("--format", table_format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    SeriesFlags sweep_flags;
    double phi_start = 0.0, phi_end = 0.0;
    int phi_steps = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "Verify over an angle grid (degrees, inclusive)");
    add_series_flags(sweep_cmd, sweep_flags);
    sweep_cmd->add_option("--phi-start", phi_start, "First angle in degrees")->required();
    sweep_cmd->add_option("--phi-end", phi_end, "Last angle in degrees")->required();
    sweep_cmd->add_option("--phi-steps", phi_steps, "Number of grid points")->required()->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    const auto angle_of = [&](CLI::Option* deg, CLI::Option* rad, double d, double r, double& phi) {
        if (deg->count() + rad->count() != 1) {
            err << "error: exactly one of --phi-deg or --phi-rad is required\n";
            return false;
        }
        phi = deg->count() ? degrees_to_radians(d) : r;
        return true;
    };

    if (eval->parsed()) {
        double phi = 0.0;
        if (!angle_of(eval_deg_opt, eval_rad_opt, eval_deg, eval_rad, phi))
            return kExitUsage;
        return single(eval_flags, phi, false, out, err);
    }
    if (verify->parsed()) {
        double phi = 0.0;
        if (!angle_of(verify_deg_opt, verify_rad_opt, verify_deg, verify_rad, phi))
            return kExitUsage;
        return single(verify_flags, phi, true, out, err);
    }
    if (table->parsed()) {
        TableId id;
        try {
            id = parse_table_id(table_id);
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        }
        const auto reports = golden_table(id);
        std::vector<OutputRecord> records;
        bool all_passed = true;
        for (const auto& rep : reports) {
            records.push_back(to_record(rep));
            all_passed = all_passed && rep.passed;
        }
        write_records(out, records, kFormats.at(table_format));
        return all_passed ? kExitOk : kExitUsage;
    }

    // sweep
    std::vector<double> grid;
    for (int i = 0; i < phi_steps; ++i) {
        const double t = phi_steps == 1 ? 0.0 : static_cast<double>(i) / (phi_steps - 1);
        const double deg = i + 1 == phi_steps && phi_steps > 1 ? phi_end : phi_start + t * (phi_end - phi_start);
        grid.push_back(degrees_to_radians(deg));
    }
    const auto reports = sweep(sweep_flags.n, grid, kKinds.at(sweep_flags.kind), kMethods.at(sweep_flags.method),
                               sweep_flags.tol, options_of(sweep_flags));
    std::vector<OutputRecord> records;
    bool budget = false, failed = false;
    for (const auto& rep : reports) {
        records.push_back(to_record(rep));
        if (rep.status == ReportStatus::DomainViolation) {
            err << "note: phi = " << format_number(rep.spec.angle) << " outside the domain; skipped\n";
            continue;
        }
        budget = budget || rep.status == ReportStatus::BudgetExhausted;
        failed = failed || !rep.passed;
    }
    write_records(out, records, kFormats.at(sweep_flags.format));
    if (budget)
        return kExitBudget;
    return failed ? kExitUsage : kExitOk;
}

} // namespace binotrig::cli
