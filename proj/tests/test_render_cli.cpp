#include <doctest.h>

#include <flatdim/cli.hpp>
#include <flatdim/render.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using flatdim::OutputFormat;
using flatdim::parse_format;
using flatdim::parse_scan_csv;
using flatdim::render_record;
using flatdim::render_scan;
using flatdim::render_system;
using flatdim::scan;
using flatdim::to_string;
using flatdim::Verdict;
using flatdim::verdict_from_string;

TEST_SUITE_BEGIN("cli");

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = flatdim::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verdict names round-trip")
{
    for (const Verdict v : {Verdict::Unexpected, Verdict::MissingExpected, Verdict::Equal,
                            Verdict::NoForms})
        CHECK(verdict_from_string(to_string(v)) == v);
    CHECK_THROWS(verdict_from_string("Surprising"));
}

TEST_CASE("scan csv round-trips to the identical record list")
{
    const auto records = scan(4, 18, 26);
    const std::string csv = render_scan(records, OutputFormat::Csv);
    CHECK(parse_scan_csv(csv) == records);
}

TEST_CASE("renderings are byte-deterministic")
{
    const auto records = scan(3, 3, 8);
    for (const auto fmt : {OutputFormat::Table, OutputFormat::Csv, OutputFormat::Json})
        CHECK(render_scan(records, fmt) == render_scan(records, fmt));
}

TEST_CASE("json keeps big integers as strings")
{
    const auto records = scan(4, 21, 21);
    const std::string json = render_record(records[0], OutputFormat::Json);
    CHECK(json.find("\"vdim\": \"12094627905536\"") != std::string::npos);
    CHECK(json.find("\"adim\": \"1337982976\"") != std::string::npos);
}

TEST_CASE("cli computes the golden examples")
{
    auto r = run_cli({"vdim", "--n", "4", "--mults", "3,3,3,3,3", "--t", "13"});
    CHECK(r.code == 0);
    CHECK(r.out == "135\n");

    r = run_cli({"sform", "--n", "2", "--s", "11", "--t", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "-5\n");

    r = run_cli({"conds", "--n", "4", "--codim", "2", "--mult", "1", "--t", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "36\n");

    r = run_cli({"adim-bound", "--n", "4", "--s", "5", "--t", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "160\n");

    r = run_cli({"certify", "--n", "4", "--s", "12", "--t", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "false\n");

    r = run_cli({"adim-family", "--n", "21", "--k", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "1337982976\n");

    r = run_cli({"vdim", "--n", "5", "--t", "2"});  // empty scheme
    CHECK(r.code == 0);
    CHECK(r.out == "21\n");
}

TEST_CASE("cli transform renders the pullback")
{
    auto r = run_cli({"transform", "--n", "4", "--degree", "7", "--mults", "1,1,1,1,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("degree:         13") != std::string::npos);
    CHECK(r.out.find("multiplicities: 3,3,3,3,3") != std::string::npos);
    CHECK(r.out.find("valid:          true") != std::string::npos);

    r = run_cli({"transform", "--n", "4", "--degree", "7", "--mults", "1,1,1,1,1", "--format",
                 "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"degree\": 13") != std::string::npos);
}

TEST_CASE("cli scan emits 48 csv rows with the verdict flip")
{
    const auto r = run_cli({"scan", "--k", "4", "--n-min", "3", "--n-max", "50", "--format",
                            "csv"});
    CHECK(r.code == 0);
    const auto records = parse_scan_csv(r.out);
    REQUIRE(records.size() == 48);
    for (const auto& rec : records)
        CHECK(rec.verdict == (rec.n <= 20 ? Verdict::Unexpected : Verdict::MissingExpected));
}

TEST_CASE("cli scan --out writes the rendering verbatim")
{
    const std::string path = "scan_out_test.csv";
    const auto r = run_cli({"scan", "--k", "3", "--n-min", "3", "--n-max", "6", "--format",
                            "csv", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream content;
    content << f.rdbuf();
    CHECK(content.str() == render_scan(scan(3, 3, 6), OutputFormat::Csv));
    std::remove(path.c_str());
}

TEST_CASE("cli oracle subcommand")
{
    auto r = run_cli({"oracle", "--n", "3", "--mults", "1,1", "--t", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");

    r = run_cli({"oracle", "--n", "3", "--mults", "1,1", "--t", "2", "--seed", "7", "--prime",
                 "1073741789"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
}

TEST_CASE("cli exit codes")
{
    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"vdim", "--n", "4"}).code == 1);          // missing --t
    CHECK(run_cli({"vdim", "--n", "4", "--t", "x"}).code == 1);
    CHECK(run_cli({"vdim", "--n", "4", "--t", "3", "--mults", "1,zz"}).code == 1);
    CHECK(run_cli({"scan", "--k", "4", "--n-min", "3", "--n-max", "50", "--format", "yaml"})
              .code == 1);
    CHECK(run_cli({"vdim", "--n", "1", "--t", "3"}).code == 2);   // bad ambient dimension
    CHECK(run_cli({"adim-family", "--n", "4", "--k", "2"}).code == 2);
    CHECK(run_cli({"oracle", "--n", "3", "--mults", "1", "--t", "2", "--prime", "91"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);

    const auto usage = run_cli({"frobnicate"});
    CHECK_FALSE(usage.err.empty());
    CHECK(usage.out.empty());
}

TEST_CASE("verify runs headlessly on a capped grid")
{
    const auto r = run_cli({"verify", "--grid-max", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("ok   ") != std::string::npos);
}

TEST_SUITE_END();
