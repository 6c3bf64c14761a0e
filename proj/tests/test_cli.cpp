#include "binotrig/cli.hpp"

#include "binotrig/report_io.hpp"

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace binotrig;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

// Pulls a numeric field out of one JSON line.
double field(const std::string& json, const std::string& key)
{
    const auto at = json.find("\"" + key + "\":");
    REQUIRE(at != std::string::npos);
    const auto rest = json.substr(at + key.size() + 3);
    if (rest.starts_with("null"))
        return std::numeric_limits<double>::quiet_NaN();
    return std::stod(rest);
}

bool has(const std::string& json, const std::string& fragment)
{
    return json.find(fragment) != std::string::npos;
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');)
        out.push_back(cell);
    return out;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("eval")
{
    auto r = run({"eval", "--n", "-1", "--phi-deg", "60", "--method", "abel"});
    CHECK(r.code == cli::kExitOk);
    REQUIRE(lines(r.out).size() == 1);
    CHECK(std::abs(field(r.out, "value") - 0.5) <= 1e-8);
    CHECK(has(r.out, "\"class\":\"abel_summable\""));
    CHECK(has(r.out, "\"method\":\"abel\""));
    CHECK(field(r.out, "phi_radians") == std::numbers::pi / 3);

    r = run({"eval", "--n", "0.5", "--phi-deg", "0", "--method", "auto"});
    CHECK(r.code == cli::kExitOk);
    CHECK(std::abs(field(r.out, "value") - std::sqrt(2.0)) <= 1e-8);

    r = run({"eval", "--n", "-0.5", "--phi-deg", "180"});
    CHECK(r.code == cli::kExitDomain);
    CHECK(r.out.empty());
    CHECK(has(r.err, "not summable"));

    r = run({"eval", "--n", "1.5", "--phi-rad", "3.5"});
    CHECK(r.code == cli::kExitDomain);

    r = run({"eval", "--n", "3", "--phi-rad", "1.1", "--kind", "sin", "--method", "closed"});
    CHECK(r.code == cli::kExitOk);
    CHECK(has(r.out, "\"method\":\"closed_form\""));
    CHECK(has(r.out, "\"kind\":\"sin\""));

    // Budget exhaustion.
    r = run({"eval", "--n", "-3", "--phi-deg", "60", "--method", "abel", "--max-terms", "10"});
    CHECK(r.code == cli::kExitBudget);
    CHECK(has(r.err, "budget"));

    // Failed verification is not an error for eval.
    r = run({"eval", "--n", "-2", "--phi-deg", "60", "--method", "direct", "--terms", "10"});
    CHECK(r.code == cli::kExitOk);
    CHECK(has(r.out, "\"passed\":false"));
}

TEST_CASE("verify")
{
    auto r = run({"verify", "--n", "4", "--phi-rad", "0.7", "--tol", "1e-12"});
    CHECK(r.code == cli::kExitOk);
    CHECK(has(r.out, "\"passed\":true"));

    r = run({"verify", "--n", "-2", "--phi-deg", "60", "--method", "abel", "--tol", "1e-6"});
    CHECK(r.code == cli::kExitOk);
    CHECK(std::abs(field(r.out, "oracle") - 1.0 / 6) <= 1e-15);

    r = run({"verify", "--n", "2", "--phi-deg", "90", "--tol", "1e-12"});
    CHECK(r.code == cli::kExitOk);
    CHECK(std::abs(field(r.out, "value")) <= 1e-12);

    r = run({"verify", "--n", "-2", "--phi-deg", "60", "--method", "direct", "--terms", "10"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(has(r.out, "\"passed\":false"));
    CHECK(has(r.err, "verification failed"));

    r = run({"verify", "--n", "-2", "--phi-deg", "180"});
    CHECK(r.code == cli::kExitDomain);
}

TEST_CASE("table")
{
    auto r = run({"table", "--id", "s15", "--format", "csv"});
    CHECK(r.code == cli::kExitOk);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0] == kCsvHeader);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = split(rows[i]);
        REQUIRE(cells.size() == 12);
        CHECK(cells.back() == "true");
    }

    r = run({"table", "--id", "s16"});
    CHECK(r.code == cli::kExitOk);
    rows = lines(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(field(rows[4], "n") == -5);
    CHECK(field(rows[4], "oracle") == -0.125);

    r = run({"table", "--id", "s12"});
    CHECK(r.code == cli::kExitOk);
    CHECK(lines(r.out).size() == 4);

    r = run({"table", "--id", "s99"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.out.empty());
    CHECK(has(r.err, "unknown table id"));
}

TEST_CASE("sweep")
{
    auto r = run({"sweep", "--n", "-3", "--phi-start", "30", "--phi-end", "150", "--phi-steps", "5", "--method",
                  "abel", "--tol", "1e-6"});
    CHECK(r.code == cli::kExitOk);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 5);
    for (const auto& row : rows)
        CHECK(has(row, "\"passed\":true"));
    CHECK(field(rows.back(), "phi_radians") == 150.0 / 180.0 * std::numbers::pi);

    r = run({"sweep", "--n", "0", "--phi-start", "-180", "--phi-end", "180", "--phi-steps", "7", "--format",
             "csv"});
    CHECK(r.code == cli::kExitOk);
    rows = lines(r.out);
    REQUIRE(rows.size() == 8);
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(split(rows[i])[4] == "1");

    // 180 deg is outside the domain for n = 1/2; the other points decide the exit code.
    r = run({"sweep", "--n", "0.5", "--phi-start", "0", "--phi-end", "180", "--phi-steps", "3"});
    CHECK(r.code == cli::kExitOk);
    rows = lines(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(has(rows[2], "\"class\":\"out_of_domain\""));
    CHECK(has(rows[2], "\"passed\":false"));
    CHECK(has(r.err, "outside the domain"));

    r = run({"sweep", "--n", "-2", "--phi-start", "30", "--phi-end", "90", "--phi-steps", "3", "--method", "direct",
             "--terms", "10"});
    CHECK(r.code == cli::kExitUsage);

    r = run({"sweep", "--n", "-2", "--phi-start", "30", "--phi-end", "90", "--phi-steps", "3", "--method", "abel",
             "--max-terms", "10"});
    CHECK(r.code == cli::kExitBudget);
    CHECK(has(lines(r.out)[0], "\"class\":\"budget_exhausted\""));
}

TEST_CASE("malformed invocations")
{
    const std::vector<std::vector<std::string>> bad{
        {},
        {"frobnicate"},
        {"eval", "--phi-deg", "30"},
        {"eval", "--n", "1"},
        {"eval", "--n", "1", "--phi-deg", "30", "--phi-rad", "0.5"},
        {"eval", "--n", "abc", "--phi-deg", "30"},
        {"eval", "--n", "1", "--phi-deg", "30", "--kind", "tan"},
        {"eval", "--n", "1", "--phi-deg", "30", "--method", "cesaro"},
        {"eval", "--n", "1", "--phi-deg", "30", "--tol", "-1"},
        {"eval", "--n", "1", "--phi-deg", "30", "--terms", "0"},
        {"table"},
        {"table", "--id", "s7", "--format", "xml"},
        {"sweep", "--n", "1", "--phi-start", "0", "--phi-end", "90"},
        {"sweep", "--n", "1", "--phi-start", "0", "--phi-end", "90", "--phi-steps", "0"},
    };
    for (const auto& args : bad) {
        const auto r = run(args);
        INFO(args.size());
        CHECK(r.code == cli::kExitUsage);
        CHECK_FALSE(r.err.empty());
        CHECK(r.out.empty());
    }
    const auto help = run({"--help"});
    CHECK(help.code == cli::kExitOk);
    CHECK(has(help.out, "sweep"));
}

TEST_CASE("identical invocations give identical output")
{
    const std::vector<std::string> args{"sweep", "--n", "-1.5", "--phi-start", "-170", "--phi-end", "170",
                                        "--phi-steps", "9", "--kind", "sin", "--format", "csv"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
}

TEST_CASE("table output matches golden files")
{
    for (const char* id : {"s7", "s11", "s12", "s13", "s15", "s16"}) {
        INFO(id);
        const auto r = run({"table", "--id", id});
        CHECK(r.code == cli::kExitOk);
        CHECK(r.out == slurp(std::string(BINOTRIG_GOLDEN_DIR) + "/" + id + ".jsonl"));
    }
}
